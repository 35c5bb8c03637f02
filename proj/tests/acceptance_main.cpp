// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria 1..11 run in-process through the shared check table;
// criterion 12 exercises the installed CLI with a corrupted multiplication.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "deltaring/verify.hpp"

#ifndef DELTARING_CLI_PATH
#define DELTARING_CLI_PATH "deltaring"
#endif

using deltaring::CheckResult;
using deltaring::VerifyOptions;

namespace {

struct Line {
  std::string tag;
  std::string title;
  bool pass;
  std::string detail;
};

bool fault_injection_trips_the_suite(std::string& detail) {
  std::string out_file = "acceptance_fault_injection.out";
  std::string cmd = std::string(DELTARING_CLI_PATH) +
                    " verify-paper --fast --inject-fault > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  int exit_code = status == -1 ? -1 : WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string output = buf.str();
  std::remove(out_file.c_str());
  size_t fails = 0;
  std::string named;
  size_t pos = 0;
  while ((pos = output.find("FAIL  ", pos)) != std::string::npos) {
    if (named.empty()) {
      size_t eol = output.find('\n', pos);
      named = output.substr(pos + 6, eol - pos - 6);
    }
    ++fails;
    pos += 6;
  }
  std::ostringstream d;
  d << "exit " << exit_code << ", " << fails << " named failures";
  if (!named.empty()) d << ", first: " << named.substr(0, named.find(" — "));
  detail = d.str();
  return exit_code != 0 && fails > 0;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--fast") opt.fast = true;

  auto results = deltaring::run_paper_checks(opt);
  std::map<std::string, const CheckResult*> by_id;
  for (const auto& r : results) by_id[r.id] = &r;
  auto get = [&](const std::string& id) -> const CheckResult& {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      std::cerr << "missing check " << id << "\n";
      std::exit(2);
    }
    return *it->second;
  };

  std::vector<Line> lines;
  auto one = [&](const std::string& tag, const std::string& title, const CheckResult& r) {
    lines.push_back({tag, title, r.pass, r.detail});
  };

  one(" 1", "ideal-lattice counts 3, 7, 47, 4979 (Remark 3.2)", get("remark-3.2-ideal-counts"));
  one(" 2", "Dedekind values FD(1..6) (Remark 3.2)", get("remark-3.2-dedekind"));
  one(" 3", "l=2 Hasse diagram: 8 covers, 6 monomial ideals (Remark 3.2)",
      get("remark-3.2-hasse-l2"));
  one(" 4", "Z_n is delta_2 iff n | 24, n <= 100 (Thm 2.2(1))", get("thm-2.2-zn"));
  one(" 5", "modular group algebra grid + exact witnesses (Thm 5.1)",
      get("thm-5.1-group-algebras"));
  one(" 6", "field classification incl. delta_5 sweep (Lemma 2.5)", get("lemma-2.5-fields"));
  one(" 7", "odd-p group algebras F2C3, F2C7, F2C5 (Thm 5.2)", get("thm-5.2-odd-group-algebras"));
  one(" 8", "delta_2 quotient criterion, zero disagreements (Prop 4.2)",
      get("props-4.2-4.3-quotient-criterion"));
  one(" 9", "eta ideal: zero iff l=1 over Z4, polarization = brute (Prop 5.3)",
      get("prop-5.3-eta-ideals"));
  {
    const auto& a = get("thm-6.2-unit-criterion");
    const auto& b = get("thm-6.3-path-delta2");
    lines.push_back({"10", "path algebras: unit criterion + delta_2 sweep (Thms 6.2, 6.3)",
                     a.pass && b.pass, a.detail + "; " + b.detail});
  }
  one("11", "delta_2 rings have abelian unit groups (Prop 2.1)", get("prop-2.1-abelian-units"));
  {
    std::string detail;
    bool pass = fault_injection_trips_the_suite(detail);
    lines.push_back({"12", "fault injection: corrupted multiplication is caught", pass, detail});
  }

  size_t passed = 0;
  for (const auto& l : lines) {
    std::cout << "[" << l.tag << "] " << (l.pass ? "PASS" : "FAIL") << "  " << l.title;
    if (!l.detail.empty()) std::cout << " — " << l.detail;
    std::cout << "\n";
    passed += l.pass;
  }

  // supplementary theorem checks outside the numbered criteria
  size_t extra_failed = 0;
  for (const auto& r : results) {
    static const std::vector<std::string> used = {
        "remark-3.2-ideal-counts", "remark-3.2-dedekind", "remark-3.2-hasse-l2", "thm-2.2-zn",
        "thm-5.1-group-algebras", "lemma-2.5-fields", "thm-5.2-odd-group-algebras",
        "props-4.2-4.3-quotient-criterion", "prop-5.3-eta-ideals", "thm-6.2-unit-criterion",
        "thm-6.3-path-delta2", "prop-2.1-abelian-units"};
    bool numbered = false;
    for (const auto& u : used) numbered |= u == r.id;
    if (numbered) continue;
    std::cout << "[--] " << (r.pass ? "PASS" : "FAIL") << "  " << r.location << " — " << r.detail
              << "\n";
    extra_failed += !r.pass;
  }

  std::cout << passed << "/" << lines.size() << " criteria passed";
  if (extra_failed) std::cout << ", " << extra_failed << " supplementary checks failed";
  std::cout << "\n";
  return passed == lines.size() && extra_failed == 0 ? 0 : 1;
}
