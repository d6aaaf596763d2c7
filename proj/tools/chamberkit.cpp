// chamberkit -- command line front end: analyze/table/roots/reduce/curves/
// packing/braid/verify-trace with text, markdown and JSON emitters.
//
// Exit codes: 0 success, 1 usage error, 2 domain precondition error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chamberkit/braid.hpp"
#include "chamberkit/curves.hpp"
#include "chamberkit/invariants.hpp"
#include "chamberkit/packing.hpp"
#include "chamberkit/reduction.hpp"

using json = nlohmann::ordered_json;

namespace {

json report_to_json(const ck::SympReport& rep) {
  json j;
  j["face"] = rep.face.label;
  j["gammaL"] = rep.gamma_L.to_string();
  j["N"] = ck::int_to_string(rep.N);
  j["NL"] = ck::int_to_string(rep.NL);
  j["pi0"] = {{"torelli", rep.pi0.torelli_name()},
              {"weyl", rep.pi0.quotient.to_string()},
              {"weylOrder", ck::int_to_string(rep.pi0.quotient.weyl_order())}};
  j["pi1"] = {{"kind", rep.pi1.exact ? "exact" : "interval"},
              {"lo", ck::int_to_string(rep.pi1.lo)},
              {"hi", ck::int_to_string(rep.pi1.hi)}};
  if (rep.q_known)
    j["Q"] = ck::int_to_string(rep.q);
  else
    j["Q"] = "unknown";
  j["flags"] = rep.flags;
  return j;
}

void print_report(const ck::SympReport& rep, std::ostream& os) {
  os << "face:      " << rep.face.label << "  (" << rep.face.area_pattern << ")\n";
  os << "Gamma_L:   " << rep.gamma_L.to_string() << "  (|W| = "
     << ck::int_to_string(rep.gamma_L.weyl_order())
     << ", positive roots " << ck::int_to_string(rep.gamma_L.positive_root_count()) << ")\n";
  os << "N / N_L:   " << ck::int_to_string(rep.N) << " / " << ck::int_to_string(rep.NL) << "\n";
  os << "pi_0:      Torelli " << rep.pi0.torelli_name() << "; quotient W("
     << rep.pi0.quotient.to_string() << ")\n";
  os << "pi_1 rank: " << rep.pi1.to_string();
  if (!rep.pi1.note.empty()) os << "  (" << rep.pi1.note << ")";
  os << "\n";
  os << "Q:         " << (rep.q_known ? ck::int_to_string(rep.q) : "unknown") << "\n";
  for (const auto& f : rep.flags) os << "flag:      " << f << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"chamberkit: wall-and-chamber invariants of small rational 4-manifolds"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_form;
  bool analyze_json = false;
  auto* cmd_analyze = app.add_subcommand("analyze", "symplectomorphism invariants of a form");
  cmd_analyze->add_option("form", analyze_form, "form literal, e.g. \"(1|1/3,1/3,1/3)\"")
      ->required();
  cmd_analyze->add_flag("--json", analyze_json, "emit JSON");

  // table
  int table_k = 0;
  bool table_json = false, table_md = false, table_compare = false;
  auto* cmd_table = app.add_subcommand("table", "regenerate the wall/chamber table for k");
  cmd_table->add_option("k", table_k, "number of blow-ups (2..5)")->required();
  cmd_table->add_flag("--json", table_json, "emit JSON");
  cmd_table->add_flag("--markdown", table_md, "emit markdown");
  cmd_table->add_flag("--paper-compare", table_compare, "print the published values beside the derived ones");

  // roots
  int roots_k = 0;
  bool roots_exc = false, roots_json = false;
  auto* cmd_roots = app.add_subcommand("roots", "enumerate -2 roots (or -1 classes) for k");
  cmd_roots->add_option("k", roots_k, "number of blow-ups (1..8)")->required();
  cmd_roots->add_flag("--exceptional", roots_exc, "enumerate exceptional classes instead");
  cmd_roots->add_flag("--json", roots_json, "emit JSON");

  // reduce
  std::string reduce_form, trace_path;
  bool reduce_normalize = false;
  auto* cmd_reduce = app.add_subcommand("reduce", "normalize a class into the reduced domain");
  cmd_reduce->add_option("form", reduce_form, "form literal")->required();
  cmd_reduce->add_option("--trace", trace_path, "write the reflection trace to a file");
  cmd_reduce->add_flag("--normalize", reduce_normalize, "scale the result to nu = 1");

  // verify-trace
  std::string verify_path;
  auto* cmd_verify = app.add_subcommand("verify-trace", "replay a reduction trace log");
  cmd_verify->add_option("file", verify_path, "trace log produced by reduce --trace")->required();

  // curves
  std::string curves_form;
  bool curves_families = false, curves_json = false;
  int audit_bound = 0;
  auto* cmd_curves = app.add_subcommand("curves", "negative sphere families (BF basis, n <= 4)");
  cmd_curves->add_option("form", curves_form, "BF form literal, e.g. \"(3/2,1|1/3,1/4)\"")
      ->required();
  cmd_curves->add_flag("--families", curves_families, "list the B/F/E families");
  cmd_curves->add_option("--audit", audit_bound, "run the simple-class audit at this bound");
  cmd_curves->add_flag("--json", curves_json, "emit JSON");

  // packing
  std::vector<std::string> packing_sizes;
  bool packing_json = false;
  auto* cmd_packing = app.add_subcommand("packing", "relative ball packing feasibility (5 sizes)");
  cmd_packing->add_option("sizes", packing_sizes, "c1 .. c5 as rationals")->expected(5);
  cmd_packing->add_flag("--json", packing_json, "emit JSON");

  // braid
  auto* cmd_braid = app.add_subcommand("braid", "sphere pure braid bookkeeping");
  int braid_n = 0;
  bool braid_noquot = false;
  auto* cmd_ab = cmd_braid->add_subcommand("abelianize", "abelianization of PB_n(S^2)[/Z2]");
  cmd_ab->add_option("n", braid_n, "strands (>= 3)")->required();
  cmd_ab->add_flag("--no-quotient", braid_noquot, "do not quotient by the full twist");
  int span_n = 0;
  std::string span_list;
  auto* cmd_span = cmd_braid->add_subcommand("span", "Z-span test of a generator subset");
  cmd_span->add_option("n", span_n, "strands (>= 3)")->required();
  cmd_span->add_option("gens", span_list, "comma list, e.g. A24,A25,A34,A35,A45")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1, --help exits 0
  }

  if (*cmd_analyze) {
    auto rep = ck::analyze(ck::parse_form(analyze_form));
    if (analyze_json)
      std::cout << report_to_json(rep).dump(2) << "\n";
    else
      print_report(rep, std::cout);
    return 0;
  }

  if (*cmd_table) {
    auto fmt = table_json ? ck::TableFormat::Json
                          : table_md ? ck::TableFormat::Markdown : ck::TableFormat::Text;
    std::cout << ck::emit_table(table_k, fmt, table_compare);
    return 0;
  }

  if (*cmd_roots) {
    std::vector<ck::HomologyClass> classes;
    if (roots_exc)
      classes = ck::enumerate_exceptional(roots_k).classes;
    else
      classes = ck::enumerate_roots(roots_k).roots;
    if (roots_json) {
      json j = json::array();
      for (const auto& c : classes) j.push_back(ck::class_to_string(c));
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& c : classes) std::cout << ck::class_to_string(c) << "\n";
      std::cout << "# " << classes.size() << (roots_exc ? " exceptional classes" : " roots")
                << "\n";
    }
    return 0;
  }

  if (*cmd_reduce) {
    auto res = ck::reduce_to_fundamental_domain(ck::parse_form(reduce_form));
    ck::FormClass out = res.form;
    if (reduce_normalize) out = ck::normalize(out);
    std::cout << ck::form_to_string(out) << "\n";
    if (res.degenerate) {
      std::cout << "# degenerate: blow down along";
      for (const auto& v : res.vanished) std::cout << " " << v;
      std::cout << "\n";
    }
    std::cout << "# " << res.trace.steps.size() << " steps\n";
    if (!trace_path.empty()) {
      std::ofstream f(trace_path);
      f << res.trace.to_log();
    }
    return 0;
  }

  if (*cmd_verify) {
    std::ifstream f(verify_path);
    if (!f) {
      std::cerr << "cannot open " << verify_path << "\n";
      return 1;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    auto trace = ck::trace_from_log(buf.str());
    ck::FormClass replayed = trace.replay();
    if (replayed == trace.end) {
      std::cout << "trace OK: " << ck::form_to_string(replayed) << "\n";
      return 0;
    }
    std::cout << "trace MISMATCH: replay gives " << ck::form_to_string(replayed) << ", log claims "
              << ck::form_to_string(trace.end) << "\n";
    return 2;
  }

  if (*cmd_curves) {
    ck::FormClass w = ck::parse_form(curves_form);
    json j;
    std::ostringstream text;
    if (curves_families || audit_bound == 0) {
      auto fams = ck::enumerate_negative_spheres(w);
      const char* names[] = {"B", "F", "E"};
      j["families"] = json::array();
      for (const auto& fam : fams) {
        json members = json::array();
        for (const auto& m : fam.members) members.push_back(ck::class_to_string(m));
        j["families"].push_back(
            {{"family", names[static_cast<int>(fam.family)]}, {"members", members}});
        text << names[static_cast<int>(fam.family)] << "-class:";
        for (const auto& m : fam.members) text << "  " << ck::class_to_string(m);
        text << "\n";
      }
    }
    if (audit_bound > 0) {
      auto audit = ck::lemma_classes_audit(w, audit_bound);
      j["audit"] = {{"checked", audit.candidates},
                    {"violations", audit.violations},
                    {"reduced", audit.precondition_ok}};
      text << "audit: checked " << audit.candidates << ", violations " << audit.violations;
      if (!audit.precondition_ok) text << "  (precondition breach: form not reduced)";
      text << "\n";
    }
    if (curves_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text.str();
    return 0;
  }

  if (*cmd_packing) {
    ck::PackingSpec spec;
    for (int i = 0; i < 5; ++i)
      spec.sizes[static_cast<size_t>(i)] = ck::parse_rational(packing_sizes[static_cast<size_t>(i)]);
    auto res = ck::relative_packing_feasible(spec);
    if (packing_json) {
      json j = {{"feasible", res.feasible}, {"boundary", res.boundary}};
      if (res.feasible) {
        j["certificate"] = ck::form_to_string(res.certificate);
        j["minSlack"] = ck::rat_to_string(res.min_slack);
      } else {
        j["reason"] = res.reason;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (res.feasible ? "feasible" : "infeasible");
      if (res.boundary) std::cout << " (boundary: some size equals 1/2)";
      if (!res.feasible) std::cout << ": " << res.reason;
      std::cout << "\n";
      if (res.feasible)
        std::cout << "certificate " << ck::form_to_string(res.certificate) << ", min slack "
                  << ck::rat_to_string(res.min_slack) << "\n";
    }
    return 0;
  }

  if (*cmd_braid) {
    if (*cmd_ab) {
      auto p = ck::build_presentation(braid_n, !braid_noquot);
      auto ab = ck::abelianization(p);
      std::cout << "free rank " << ck::int_to_string(ab.free_rank);
      if (!ab.torsion.empty()) {
        std::cout << ", torsion";
        for (const auto& d : ab.torsion) std::cout << " Z" << ck::int_to_string(d);
      }
      std::cout << "\n";
      return 0;
    }
    if (*cmd_span) {
      auto p = ck::build_presentation(span_n, true);
      std::vector<std::pair<int, int>> subset;
      std::stringstream ss(span_list);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.size() < 3 || tok[0] != 'A') {
          std::cerr << "bad generator '" << tok << "', expected like A24\n";
          return 1;
        }
        std::string idx = tok.substr(1);
        int i, jj;
        if (idx.find('_') != std::string::npos) {
          i = std::stoi(idx.substr(0, idx.find('_')));
          jj = std::stoi(idx.substr(idx.find('_') + 1));
        } else if (idx.size() == 2) {
          i = idx[0] - '0';
          jj = idx[1] - '0';
        } else {
          std::cerr << "bad generator '" << tok << "', use Ai_j for two-digit strands\n";
          return 1;
        }
        subset.emplace_back(i, jj);
      }
      std::cout << (ck::span_check(p, subset) ? "spans" : "does not span")
                << " the abelianization\n";
      return 0;
    }
    std::cerr << "braid requires a subcommand (abelianize | span)\n";
    return 1;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ck::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
