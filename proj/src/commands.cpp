#include "semikern/commands.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "semikern/constructions.hpp"
#include "semikern/decorate.hpp"
#include "semikern/finab.hpp"
#include "semikern/homcheck.hpp"
#include "semikern/vect.hpp"

namespace semikern {

namespace {

using json = nlohmann::ordered_json;

json matrix_json(const Mor& m) {
  if (const auto* f = std::any_cast<FpMatrix>(&m.payload)) {
    json rows = json::array();
    for (std::size_t i = 0; i < f->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < f->cols(); ++j) row.push_back(f->at(i, j));
      rows.push_back(row);
    }
    return rows;
  }
  if (const auto* z = std::any_cast<IntMatrix>(&m.payload)) {
    json rows = json::array();
    for (std::size_t i = 0; i < z->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < z->cols(); ++j)
        row.push_back(z->at(i, j).convert_to<long long>());
      rows.push_back(row);
    }
    return rows;
  }
  return nullptr;
}

json morphism_json(const Category& c, const Mor& m) {
  json j;
  j["src"] = c.describe_object(m.src);
  j["dst"] = c.describe_object(m.dst);
  j["matrix"] = matrix_json(m);
  return j;
}

json subobject_json(const Category& c, const SubobjectPair& s) {
  json j;
  j["object"] = c.describe_object(s.sub);
  j["embed"] = matrix_json(s.embed);
  return j;
}

json quotient_json(const Category& c, const QuotientPair& q) {
  json j;
  j["object"] = c.describe_object(q.quot);
  j["project"] = matrix_json(q.project);
  return j;
}

// plain text rendering of the same report tree
void render_text(const json& j, const std::string& indent, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      os << indent << it.key() << ":\n";
      render_text(it.value(), indent + "  ", os);
    } else if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) {
      os << indent << it.key() << ":\n";
      for (const auto& el : it.value()) {
        os << indent << "  -\n";
        render_text(el, indent + "    ", os);
      }
    } else {
      os << indent << it.key() << ": " << it.value().dump() << "\n";
    }
  }
}

CommandResult finish(const json& report, const CommandOptions& opt, int exit_code) {
  CommandResult r;
  r.exit_code = exit_code;
  if (opt.json) {
    r.output = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    render_text(report, "", os);
    r.output = os.str();
  }
  return r;
}

SubobjectPair subobject_arg(const Session& s, const std::string& name) {
  const Mor& m = s.morphism(name);
  return SubobjectPair{m.src, m};
}

json factorization_json(const Category& c, const FactorizationReport& r, bool witnesses) {
  json j;
  j["injective"] = r.injective;
  j["surjective"] = r.surjective;
  j["bijective"] = r.bijective;
  j["u_bar_bijective"] = r.u_bar_bijective;
  j["strict"] = r.strict;
  j["kernel"] = c.describe_object(r.ker.pair.sub);
  j["cokernel"] = c.describe_object(r.coker.pair.quot);
  j["image"] = c.describe_object(r.im.sub);
  j["coimage"] = c.describe_object(r.coim.quot);
  if (witnesses) {
    j["kernel_embed"] = matrix_json(r.ker.pair.embed);
    j["cokernel_project"] = matrix_json(r.coker.pair.project);
    j["image_embed"] = matrix_json(r.im.embed);
    j["coimage_project"] = matrix_json(r.coim.project);
    j["u_bar"] = matrix_json(r.u_bar);
    if (r.u_bar_inverse) j["u_bar_inverse"] = matrix_json(*r.u_bar_inverse);
  }
  return j;
}

// ---- the axiom suite ----

struct SuiteCheck {
  std::string name;
  bool pass = true;
  int cases = 0;
  std::string detail;
};

json suite_check_json(const SuiteCheck& c) {
  json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["cases"] = c.cases;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json run_axiom_suite(const Session& session, const CommandOptions& opt, bool& all_pass) {
  const Category& c = session.category();
  Rng rng(opt.seed);
  std::vector<SuiteCheck> checks;

  auto sample_morphism = [&](Mor& out) {
    Obj a = c.random_object(opt.max_dim, rng);
    Obj b = c.random_object(opt.max_dim, rng);
    out = c.random_morphism(a, b, rng);
  };

  {
    SuiteCheck ck{"hom-group-laws"};
    for (int it = 0; it < opt.samples; ++it) {
      Mor u;
      sample_morphism(u);
      Mor v = c.random_morphism(u.src, u.dst, rng);
      Mor zero = c.zero_morphism(u.src, u.dst);
      bool ok = c.morphisms_equal(c.add(u, v), c.add(v, u)) &&
                c.morphisms_equal(c.add(u, c.negate(u)), zero) &&
                c.morphisms_equal(c.add(zero, u), u);
      if (ok) {
        Obj d = c.random_object(opt.max_dim, rng);
        Mor w = c.random_morphism(u.dst, d, rng);
        ok = c.morphisms_equal(c.compose(w, c.add(u, v)),
                               c.add(c.compose(w, u), c.compose(w, v)));
      }
      ++ck.cases;
      if (!ok) {
        ck.pass = false;
        ck.detail = "failure at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"zero-object"};
    Obj z = c.zero_object();
    ck.cases = 1;
    ck.pass = c.is_zero_object(z) && c.enumerate_hom(z, z, 8)->size() == 1;
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"biproduct-identities"};
    for (int it = 0; it < opt.samples / 4 + 1; ++it) {
      Obj a = c.random_object(opt.max_dim, rng), b = c.random_object(opt.max_dim, rng);
      Biproduct bp = c.biproduct(a, b);
      bool ok = c.morphisms_equal(c.compose(bp.p_a, bp.q_a), c.identity(a)) &&
                c.morphisms_equal(c.compose(bp.p_b, bp.q_b), c.identity(b)) &&
                c.morphisms_equal(c.compose(bp.p_a, bp.q_b), c.zero_morphism(b, a)) &&
                c.morphisms_equal(c.compose(bp.p_b, bp.q_a), c.zero_morphism(a, b)) &&
                c.morphisms_equal(c.add(c.compose(bp.q_a, bp.p_a), c.compose(bp.q_b, bp.p_b)),
                                  c.identity(bp.object));
      ++ck.cases;
      if (!ok) {
        ck.pass = false;
        ck.detail = "failure at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"kernel-cokernel-universal"};
    int n = opt.samples / 4 + 1;
    for (int it = 0; it < n; ++it) {
      Mor u;
      sample_morphism(u);
      std::vector<Obj> probes = c.probe_objects({u.src, u.dst});
      if (opt.paranoid)
        for (int extra = 0; extra < 3; ++extra)
          probes.push_back(c.random_object(opt.max_dim, rng));
      VerifyResult kr = verify_kernel(c, u, c.kernel(u).pair, probes);
      VerifyResult cr = verify_cokernel(c, u, c.cokernel(u).pair, probes);
      ++ck.cases;
      if (!kr.ok || !cr.ok) {
        ck.pass = false;
        ck.detail = !kr.ok ? kr.detail : cr.detail;
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"factorization-bijective"};
    for (int it = 0; it < opt.samples; ++it) {
      Mor u;
      sample_morphism(u);
      FactorizationReport r = canonical_factor(c, u);
      ++ck.cases;
      if (!r.u_bar_bijective) {
        ck.pass = false;
        ck.detail = "u_bar not bijective at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"kernel-legs-strict"};
    for (int it = 0; it < opt.samples / 4 + 1; ++it) {
      Mor u;
      sample_morphism(u);
      ++ck.cases;
      if (!is_strict(c, c.kernel(u).pair.embed) ||
          !is_strict(c, c.cokernel(u).pair.project)) {
        ck.pass = false;
        ck.detail = "non-strict leg at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"kernel-monotone-under-composition"};
    for (int it = 0; it < opt.samples / 2 + 1; ++it) {
      Mor u;
      sample_morphism(u);
      Obj d = c.random_object(opt.max_dim, rng);
      Mor v = c.random_morphism(u.dst, d, rng);
      SubobjectPair ku = c.kernel(u).pair;
      SubobjectPair kvu = c.kernel(c.compose(v, u)).pair;
      bool ok = subobject_leq(c, ku, kvu).has_value();
      if (ok && is_injective(c, v)) ok = subobject_leq(c, kvu, ku).has_value();
      ++ck.cases;
      if (!ok) {
        ck.pass = false;
        ck.detail = "failure at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"orthogonality-agreement"};
    for (int it = 0; it < opt.samples / 2 + 1; ++it) {
      Mor u;
      sample_morphism(u);
      Obj d = c.random_object(opt.max_dim, rng);
      Mor v = c.random_morphism(u.dst, d, rng);
      ++ck.cases;
      if (!orthogonality_check(c, u, v).agree()) {
        ck.pass = false;
        ck.detail = "disagreement at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"strict-subobject-roundtrip"};
    for (int it = 0; it < opt.samples / 4 + 1; ++it) {
      Obj a = c.random_object(opt.max_dim, rng);
      SubobjectPair s = c.random_strict_subobject(a, rng);
      QuotientPair q = c.cokernel(s.embed).pair;
      ++ck.cases;
      if (!subobjects_isomorphic(c, c.kernel(q.project).pair, s)) {
        ck.pass = false;
        ck.detail = "roundtrip failure at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  {
    SuiteCheck ck{"total-kernel-forces-zero"};
    for (int it = 0; it < opt.samples; ++it) {
      Mor u;
      sample_morphism(u);
      ++ck.cases;
      if (is_isomorphism(c, c.kernel(u).pair.embed).has_value() &&
          !c.morphisms_equal(u, c.zero_morphism(u.src, u.dst))) {
        ck.pass = false;
        ck.detail = "nonzero morphism with total kernel at sample " + std::to_string(it);
        break;
      }
    }
    checks.push_back(ck);
  }

  all_pass = true;
  json arr = json::array();
  for (const auto& ck : checks) {
    arr.push_back(suite_check_json(ck));
    if (!ck.pass) all_pass = false;
  }

  // classification: hunt for a bijective morphism without an inverse; the
  // witnesses are rare among random samples, so give the hunt a floor
  json classification;
  classification["semiabelian"] = all_pass;
  bool witness_found = false;
  json witness;
  int hunt_budget = std::max(opt.samples, 1000);
  for (int it = 0; it < hunt_budget && !witness_found; ++it) {
    Mor u;
    sample_morphism(u);
    if (is_bijective(c, u) && !c.inverse(u).has_value()) {
      witness_found = true;
      witness = morphism_json(c, u);
    }
  }
  classification["abelian"] = !witness_found;
  if (witness_found) classification["bijective_noniso_witness"] = witness;

  json out;
  out["checks"] = arr;
  out["classification"] = classification;
  return out;
}

// ---- the counterexample miner ----

json mine_pattern(const Session& session, const std::string& pattern, const CommandOptions& opt,
                  std::string& witness_text) {
  const Category& c = session.category();
  Rng rng(opt.seed);
  json out;
  out["pattern"] = pattern;
  out["seed"] = opt.seed;
  out["budget"] = opt.samples;
  out["found"] = false;

  auto emit_morphism_witness = [&](const Mor& u, const char* replay) {
    Session w;
    w.set_category(session.kind(), session.prime());
    w.add_object("A", u.src);
    w.add_object("B", u.dst);
    w.add_morphism("u", u);
    witness_text = w.to_text();
    out["found"] = true;
    out["witness"] = morphism_json(c, u);
    out["witness_session"] = witness_text;
    out["replay"] = replay;
  };

  for (int it = 0; it < opt.samples; ++it) {
    if (pattern == "bijective-noniso" || pattern == "nonstrict") {
      Obj a = c.random_object(opt.max_dim, rng);
      Obj b = c.random_object(opt.max_dim, rng);
      Mor u = c.random_morphism(a, b, rng);
      if (pattern == "bijective-noniso") {
        if (is_bijective(c, u) && !c.inverse(u).has_value()) {
          emit_morphism_witness(u, "factor u");
          break;
        }
      } else {
        if (!is_strict(c, u)) {
          emit_morphism_witness(u, "factor u");
          break;
        }
      }
    } else if (pattern == "iso2-noniso") {
      Obj a = c.random_object(opt.max_dim, rng);
      SubobjectPair s1 = c.random_strict_subobject(a, rng);
      SubobjectPair s2 = c.random_strict_subobject(a, rng);
      SecondIsoReport r = second_iso(c, s1, s2);
      if (r.bijective && !r.iso) {
        Session w;
        w.set_category(session.kind(), session.prime());
        w.add_object("AMB", a);
        w.add_object("S1", s1.sub);
        w.add_object("S2", s2.sub);
        w.add_morphism("i1", s1.embed);
        w.add_morphism("i2", s2.embed);
        witness_text = w.to_text();
        out["found"] = true;
        out["witness_session"] = witness_text;
        out["replay"] = "iso2 i1 i2";
        break;
      }
    } else {
      throw std::runtime_error("unknown mining pattern '" + pattern + "'");
    }
  }
  return out;
}

}  // namespace

CommandResult run_command(const std::string& command, const std::vector<std::string>& args,
                          const Session& session, const CommandOptions& opt) {
  json report;
  report["command"] = command;
  for (const auto& a : args) report["args"].push_back(a);

  try {
    if (command == "analyze" || command == "factor") {
      if (args.size() != 1) throw std::runtime_error("expected one morphism name");
      const Category& c = session.category();
      const Mor& u = session.morphism(args[0]);
      FactorizationReport r = canonical_factor(c, u);
      report["morphism"] = morphism_json(c, u);
      report["factorization"] = factorization_json(c, r, command == "factor");
      return finish(report, opt, 0);
    }

    if (command == "kernel" || command == "cokernel") {
      if (args.size() != 1) throw std::runtime_error("expected one morphism name");
      const Category& c = session.category();
      const Mor& u = session.morphism(args[0]);
      report["morphism"] = morphism_json(c, u);
      if (command == "kernel")
        report["kernel"] = subobject_json(c, c.kernel(u).pair);
      else
        report["cokernel"] = quotient_json(c, c.cokernel(u).pair);
      return finish(report, opt, 0);
    }

    if (command == "meet" || command == "join") {
      if (args.size() != 2) throw std::runtime_error("expected two subobject morphism names");
      const Category& c = session.category();
      SubobjectPair s1 = subobject_arg(session, args[0]);
      SubobjectPair s2 = subobject_arg(session, args[1]);
      MeetJoinResult r = command == "meet" ? meet_subobjects(c, s1, s2)
                                           : join_subobjects(c, s1, s2);
      report["result"] = subobject_json(c, r.sub);
      report["first_mediator"] = matrix_json(r.first_mediator);
      report["second_mediator"] = matrix_json(r.second_mediator);
      return finish(report, opt, 0);
    }

    if (command == "iso2") {
      if (args.size() != 2) throw std::runtime_error("expected two subobject morphism names");
      const Category& c = session.category();
      SecondIsoReport r =
          second_iso(c, subobject_arg(session, args[0]), subobject_arg(session, args[1]));
      report["lhs"] = c.describe_object(r.lhs.quot);
      report["rhs"] = c.describe_object(r.rhs.quot);
      report["theta"] = matrix_json(r.theta);
      report["bijective"] = r.bijective;
      report["iso"] = r.iso;
      if (r.inverse) report["inverse"] = matrix_json(*r.inverse);
      return finish(report, opt, 0);
    }

    if (command == "iso3") {
      if (args.size() != 2) throw std::runtime_error("expected outer and inner morphism names");
      const Category& c = session.category();
      ThirdIsoReport r =
          third_iso(c, subobject_arg(session, args[0]), subobject_arg(session, args[1]));
      report["quotient_by_inner"] = c.describe_object(r.quot_inner.quot);
      report["quotient_by_outer"] = c.describe_object(r.quot_outer.quot);
      report["ker_v"] = subobject_json(c, r.ker_v.pair);
      report["theta"] = matrix_json(r.theta);
      report["theta_bijective"] = r.bijective;
      report["double_quotient"] = c.describe_object(r.double_quot.quot);
      report["iso_witness"] = matrix_json(r.iso_witness);
      report["iso"] = r.iso;
      if (r.iso_inverse) report["iso_inverse"] = matrix_json(*r.iso_inverse);
      report["inner_image_is_kernel_of_alpha"] = r.im_inner_is_ker_alpha;
      report["alpha_image_is_kernel_of_v"] = r.im_alpha_is_ker_v;
      return finish(report, opt, 0);
    }

    if (command == "refine") {
      if (args.size() != 2) throw std::runtime_error("expected two subobject morphism names");
      const Category& c = session.category();
      RefinementResult r =
          refinement(c, subobject_arg(session, args[0]), subobject_arg(session, args[1]));
      report["by_first"] = quotient_json(c, r.by_first);
      report["by_second"] = quotient_json(c, r.by_second);
      report["induced"] = matrix_json(r.v);
      report["surjective"] = is_surjective(c, r.v);
      report["strict"] = is_strict(c, r.v);
      return finish(report, opt, 0);
    }

    if (command == "hom") {
      if (args.size() != 2) throw std::runtime_error("expected two object names");
      const Category& c = session.category();
      HomGroup g = realize_hom(c, session.object(args[0]), session.object(args[1]));
      report["source"] = c.describe_object(g.source);
      report["target"] = c.describe_object(g.target);
      report["complete"] = g.complete();
      if (g.complete()) {
        report["size"] = g.elements->size();
        if (g.elements->size() <= 256) {
          json els = json::array();
          for (const auto& m : *g.elements) els.push_back(matrix_json(m));
          report["elements"] = els;
        }
      } else {
        report["note"] = g.note;
      }
      return finish(report, opt, 0);
    }

    if (command == "check-axioms") {
      if (!args.empty()) throw std::runtime_error("check-axioms takes no arguments");
      const Category& c = session.category();
      report["category"] = c.name();
      report["seed"] = opt.seed;
      report["samples"] = opt.samples;
      report["max_dim"] = opt.max_dim;
      bool all_pass = false;
      json suite = run_axiom_suite(session, opt, all_pass);
      report["checks"] = suite["checks"];
      report["classification"] = suite["classification"];
      return finish(report, opt, all_pass ? 0 : 1);
    }

    if (command == "mine") {
      if (args.size() != 1) throw std::runtime_error("expected one pattern name");
      const Category& c = session.category();
      report["category"] = c.name();
      std::string witness_text;
      json mined = mine_pattern(session, args[0], opt, witness_text);
      for (auto it = mined.begin(); it != mined.end(); ++it) report[it.key()] = it.value();
      return finish(report, opt, 0);
    }

    throw std::runtime_error("unknown command '" + command + "'");
  } catch (const std::exception& e) {
    report["error"] = e.what();
    return finish(report, opt, 2);
  }
}

}  // namespace semikern
