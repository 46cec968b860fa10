#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "a2ck/cktwo.hpp"
#include "a2ck/errors.hpp"
#include "a2ck/presentation.hpp"
#include "a2ck/report.hpp"
#include "a2ck/transition.hpp"
#include "a2ck/zmat.hpp"

namespace {

int exit_code(a2ck::ErrorKind k) {
  switch (k) {
    case a2ck::ErrorKind::syntax: return 2;
    case a2ck::ErrorKind::validation: return 3;
    case a2ck::ErrorKind::consistency: return 1;
    case a2ck::ErrorKind::usage: return 4;
  }
  return 4;
}

struct Source {
  std::string file;
  std::string name;
};

a2ck::TrianglePresentation load_source(const Source& s) {
  if (s.file.empty() == s.name.empty())
    throw a2ck::UsageError(
        "provide exactly one of a presentation file or --builtin");
  if (!s.name.empty()) return a2ck::builtin(s.name);
  std::ifstream in(s.file);
  if (!in) throw a2ck::UsageError("cannot read '" + s.file + "'");
  return a2ck::parse_presentation(in);
}

a2ck::IntMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw a2ck::UsageError("cannot read '" + path + "'");
  return a2ck::read_matrix_text(in);
}

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int run_validate(const std::string& file, bool json) {
  std::ifstream in(file);
  if (!in) throw a2ck::UsageError("cannot read '" + file + "'");
  auto p = a2ck::parse_presentation(in);
  auto vp = a2ck::validate(p);
  if (json)
    std::cout << a2ck::validate_json(vp, a2ck::presentation_digest(p)).dump(2)
              << "\n";
  else
    std::cout << a2ck::validate_text(vp);
  return 0;
}

int run_ktheory(const Source& src, bool json) {
  auto t0 = std::chrono::steady_clock::now();
  auto p = load_source(src);
  auto vp = a2ck::validate(p);
  auto rep = a2ck::k_theory_a2(vp, src.name.empty() ? src.file : src.name);
  std::string digest = a2ck::presentation_digest(p);
  std::int64_t ms = ms_since(t0);
  if (json) {
    a2ck::Json j = a2ck::ktheory_json(rep, digest);
    j["elapsed_ms"] = ms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << a2ck::ktheory_text(rep, digest);
    std::cerr << "elapsed: " << ms << " ms\n";
  }
  return 0;
}

int run_matrices(const Source& src, const std::string& which,
                 const std::string& out_path) {
  auto p = load_source(src);
  auto vp = a2ck::validate(p);
  a2ck::TransitionPair tp =
      which.front() == 'h' ? a2ck::build_hat(vp) : a2ck::build_check(vp);
  const a2ck::IntMatrix& m = which.back() == '1' ? tp.m1 : tp.m2;
  std::vector<std::string> comments = {
      which + " transition matrix, " + std::to_string(m.rows()) + " x " +
          std::to_string(m.cols()),
      "source digest " + a2ck::presentation_digest(p),
      "rows and columns are indexed by the alphabet in lexicographic order",
  };
  if (out_path.empty()) {
    a2ck::write_matrix_text(std::cout, m, comments);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw a2ck::UsageError("cannot write '" + out_path + "'");
  a2ck::write_matrix_text(out, m, comments);
  out.flush();
  if (!out) throw a2ck::UsageError("write failed on '" + out_path + "'");
  return 0;
}

int run_analyze(const std::string& f1, const std::string& f2, int window,
                bool json) {
  auto t0 = std::chrono::steady_clock::now();
  auto m1 = load_matrix(f1);
  auto m2 = load_matrix(f2);
  a2ck::AnalyzeReport r = a2ck::analyze_pair(m1, m2, window);
  std::int64_t ms = ms_since(t0);
  if (json) {
    a2ck::Json j = a2ck::analyze_json(r);
    j["elapsed_ms"] = ms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << a2ck::analyze_text(r);
    std::cerr << "elapsed: " << ms << " ms\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact K-theory and structure checks for shift matrices built from "
      "triangle presentations"};
  app.set_version_flag("--version", std::string(a2ck::kVersion));
  app.require_subcommand(1);

  std::string v_file;
  bool v_json = false;
  auto* v = app.add_subcommand("validate",
                               "parse a presentation file and check its axioms");
  v->add_option("file", v_file, "presentation file")->required();
  v->add_flag("--json", v_json, "emit a machine readable report");

  Source k_src;
  bool k_json = false;
  auto* k = app.add_subcommand(
      "ktheory", "compute K-groups and run the full consistency checks");
  k->add_option("file", k_src.file, "presentation file");
  k->add_option("--builtin", k_src.name,
                "bundled presentation name (B.2 or C.1)");
  k->add_flag("--json", k_json, "emit a machine readable report");

  Source m_src;
  std::string m_which, m_out;
  auto* m = app.add_subcommand("matrices",
                               "print one transition matrix in sparse text form");
  m->add_option("file", m_src.file, "presentation file");
  m->add_option("--builtin", m_src.name,
                "bundled presentation name (B.2 or C.1)");
  m->add_option("--which", m_which, "which matrix to print")
      ->required()
      ->check(CLI::IsMember({"hat1", "hat2", "check1", "check2"}));
  m->add_option("-o,--output", m_out, "output file (default stdout)");

  std::string a_m1, a_m2;
  int a_window = 4;
  bool a_json = false;
  auto* an = app.add_subcommand(
      "analyze", "condition checks and K-theory for a raw 0/1 matrix pair");
  an->add_option("--m1", a_m1, "first matrix file")->required();
  an->add_option("--m2", a_m2, "second matrix file")->required();
  an->add_option("--h3-window", a_window, "aperiodicity search window");
  an->add_flag("--json", a_json, "emit a machine readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (v->parsed()) return run_validate(v_file, v_json);
    if (k->parsed()) return run_ktheory(k_src, k_json);
    if (m->parsed()) return run_matrices(m_src, m_which, m_out);
    if (an->parsed()) return run_analyze(a_m1, a_m2, a_window, a_json);
  } catch (const a2ck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 4;
}
