#include "ramac/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ramac/expr.hpp"
#include "ramac/json_io.hpp"
#include "ramac/nbasis.hpp"
#include "ramac/ramify.hpp"

namespace ramac {

using nlohmann::json;

TowerSpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::SchemaError, "cannot open spec file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(Errc::SchemaError, "malformed JSON in '" + path + "': " + e.what());
  }
  TowerSpecFile spec;
  require(doc.is_object(), Errc::SchemaError, "spec document must be a JSON object");
  require(doc.contains("p") && doc["p"].is_number_integer(), Errc::SchemaError,
          "spec needs an integer field 'p'");
  require(doc.contains("rhs") && doc["rhs"].is_array() && !doc["rhs"].empty(), Errc::SchemaError,
          "spec needs a nonempty array field 'rhs'");
  spec.p = doc["p"].get<int>();
  if (doc.contains("f")) {
    require(doc["f"].is_number_integer(), Errc::SchemaError, "'f' must be an integer");
    spec.f = doc["f"].get<int>();
  }
  for (const auto& item : doc["rhs"]) {
    require(item.is_string(), Errc::SchemaError, "'rhs' entries must be strings");
    spec.rhs.push_back(item.get<std::string>());
  }
  auto slash = path.find_last_of("/\\");
  std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = stem.rfind('.');
  spec.label = dot == std::string::npos ? stem : stem.substr(0, dot);
  return spec;
}

Tower tower_from_spec(const TowerSpecFile& spec) {
  const FqField& F = FqField::get(spec.p, spec.f);
  std::vector<LaurentPoly> rhs;
  rhs.reserve(spec.rhs.size());
  for (const auto& s : spec.rhs) {
    try {
      rhs.push_back(parse_base_element(s, F));
    } catch (const ParseError& e) {
      fail(Errc::SchemaError, "bad rhs '" + s + "': " + e.what());
    }
  }
  return Tower(F, rhs);
}

namespace {

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (long long x : v) {
    if (!s.empty()) s += " ";
    s += std::to_string(x);
  }
  return s;
}

void render_ramify(std::ostream& out, const std::string& label, const Tower& T,
                   const RamificationData& rd, const PropositionReport& prop) {
  out << "tower " << label << ": p=" << T.p() << " degree=" << T.degree() << " steps="
      << T.num_steps() << "\n";
  out << "  lower breaks : " << join(rd.lower_breaks) << "\n";
  out << "  orders |G_b| : " << join(rd.orders) << "\n";
  out << "  upper breaks :";
  for (const auto& u : rd.upper_breaks) out << " " << u.str();
  out << "\n";
  out << "  d derivative : " << rd.d_derivative << "\n";
  out << "  d breaks     : " << rd.d_breaks << "\n";
  out << "  d sum|G_i|-1 : " << rd.d_igsum << "\n";
  out << "  residue r*   : " << rd.criterion_residue << "\n";
  out << "  d+1 = g1 - b_m + p^n u_m : " << (prop.identity_holds ? "ok" : "FAIL") << "\n";
  out << "  congruence mod [L:K]     : " << (prop.congruence_holds ? "ok" : "FAIL") << "\n";
  out << "  Hasse-Arf integrality    : " << (prop.hasse_arf_integral ? "ok" : "FAIL") << "\n";
  out << "  r* = b_m mod p^n         : " << (prop.remark_holds ? "ok" : "FAIL") << "\n";
}

void emit(const json& doc, const RunConfig& cfg, std::ostream& out, bool table_already_printed) {
  if (cfg.format == "json" && !table_already_printed) out << doc.dump(2) << "\n";
  if (!cfg.json_path.empty()) {
    std::ofstream f(cfg.json_path);
    require(f.good(), Errc::SchemaError, "cannot write JSON to '" + cfg.json_path + "'");
    f << doc.dump(2) << "\n";
  }
}

int run_impl(const RunConfig& cfg, std::ostream& out) {
  const bool table = cfg.format == "table";
  require(cfg.format == "table" || cfg.format == "json", Errc::SchemaError,
          "format must be 'table' or 'json'");

  if (cfg.command == RunConfig::Command::Counterexample) {
    require(cfg.counter_kind == "tame" || cfg.counter_kind == "unramified", Errc::SchemaError,
            "counterexample kind must be 'tame' or 'unramified'");
    require(cfg.i_min <= cfg.i_max, Errc::SchemaError, "empty i range");
    json arr = json::array();
    for (long long i = cfg.i_min; i <= cfg.i_max; ++i) {
      CounterexampleRecord rec = cfg.counter_kind == "tame"
                                     ? tame_counterexample(cfg.q, cfg.e, i)
                                     : unramified_counterexample(cfg.q, cfg.f, i);
      if (table) {
        out << rec.kind << " q=" << rec.q << (rec.kind == "tame" ? " e=" : " f=") << rec.param
            << " i=" << std::setw(3) << rec.i << ": rho=" << rec.rho
            << "  dim K[G]rho=" << rec.span_dim << " < " << rec.full_dim
            << "  det=0:" << (rec.det_is_zero ? "yes" : "no")
            << "  generator:" << (rec.is_generator ? "yes" : "no") << "\n";
      }
      arr.push_back(to_json(rec));
    }
    emit(arr, cfg, out, table);
    return 0;
  }

  require(!cfg.spec_path.empty(), Errc::SchemaError, "--spec PATH is required");
  TowerSpecFile spec = load_spec_file(cfg.spec_path);
  Tower T = tower_from_spec(spec);

  switch (cfg.command) {
    case RunConfig::Command::Ramify: {
      RamificationData rd = ramification_data(T);
      PropositionReport prop = proposition_check(rd);
      json doc = to_json(rd);
      doc["proposition"] = to_json(prop);
      doc["tower"] = spec.label;
      if (table) render_ramify(out, spec.label, T, rd, prop);
      emit(doc, cfg, out, table);
      return 0;
    }
    case RunConfig::Command::Euler: {
      EulerTraceReport rep = verify_euler_traces(T);
      json doc = to_json(rep);
      doc["tower"] = spec.label;
      if (table) {
        out << "tower " << spec.label << ": Tr(pi^i / p'(pi))\n";
        for (std::size_t i = 0; i < rep.traces.size(); ++i)
          out << "  i=" << std::setw(2) << i << " : " << rep.traces[i] << "\n";
        out << "  dual basis representable: " << (rep.direct_route_used ? "yes" : "no (cleared form used)")
            << "\n";
      }
      emit(doc, cfg, out, table);
      return 0;
    }
    case RunConfig::Command::Check: {
      require(!cfg.expr.empty(), Errc::SchemaError, "check needs an element expression");
      LElem rho = parse_tower_element(cfg.expr, T);
      long long rstar = criterion_residue(T);
      Valuation v = rho.valuation();
      LaurentPoly tr = T.trace(rho);
      bool gen = is_normal_generator(T, rho);
      json doc;
      doc["tower"] = spec.label;
      doc["element"] = print_lelem(rho);
      doc["criterion_residue"] = rstar;
      doc["is_generator"] = gen;
      doc["trace"] = print_laurent(tr);
      if (v.is_finite()) {
        long long cls = ((v.value() % T.degree()) + T.degree()) % T.degree();
        doc["v_L"] = v.value();
        doc["class"] = cls;
        doc["in_criterion_class"] = (cls == rstar);
        if (table)
          out << "v_L=" << v.value() << ", class " << cls << (cls == rstar ? " = r*" : " != r*")
              << " (r*=" << rstar << "), trace=" << print_laurent(tr)
              << ", generator: " << (gen ? "yes" : "no") << "\n";
      } else {
        doc["v_L"] = "inf";
        doc["class"] = nullptr;
        doc["in_criterion_class"] = false;
        if (table) out << "v_L=inf (zero element), generator: no\n";
      }
      emit(doc, cfg, out, table);
      return 0;
    }
    case RunConfig::Command::Verify: {
      CriterionReport rep = verify_criterion(T, cfg.trials, cfg.seed, spec.label);
      json doc = to_json(rep);
      if (table) {
        out << "tower " << spec.label << ": criterion class r* = " << rep.criterion_residue
            << " mod " << rep.degree << "\n";
        out << "  " << rep.generators_found << "/" << rep.trials
            << " sampled class-r* elements generate a normal basis (seed " << rep.seed << ")\n";
        for (const auto& w : rep.witnesses)
          out << "  class " << w.residue_class << ": witness v_L=" << w.vL
              << " trace=0 generator:no  " << w.element << "\n";
      }
      emit(doc, cfg, out, table);
      return 0;
    }
    case RunConfig::Command::TraceIdeal: {
      TraceIdealReport rep = trace_ideal_check(T, cfg.k_min, cfg.k_max);
      json doc = to_json(rep);
      doc["tower"] = spec.label;
      if (table) {
        out << "tower " << spec.label << ": d = " << rep.d << "\n";
        for (const auto& r : rep.rows)
          out << "  k=" << std::setw(3) << r.k << ": Tr maps v_L>=" << std::setw(4) << r.floor_vL
              << " into v_K>=" << r.k << " ok; witness v_L=" << r.witness_vL
              << " has v_K(Tr)=" << r.witness_trace_vK << "\n";
      }
      emit(doc, cfg, out, table);
      return 0;
    }
    default: fail(Errc::SchemaError, "unknown command");
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::SchemaError:
      case Errc::BadParameters:
      case Errc::SyntaxError:
      case Errc::UnknownVariable: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ramac
