// Command-line driver for generic erasure-correcting sets: construction,
// certification, randomized search, parity check generation, peeling
// decoding and stopping-set analysis.
//
// Exit codes: 0 success/pass, 1 verification fail / decoder stuck / search
// exhausted, 2 usage or format error. Positions in all output are 1-indexed.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gecs/gecs.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_pattern(std::ostream& out, const gecs::ErasurePattern& pattern) {
  out << '{';
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out << ',';
    out << pattern[i] + 1;
  }
  out << '}';
}

int cmd_genset(const std::string& kind, unsigned r, unsigned m,
               const std::string& out_path) {
  gecs::GenericSet set = kind == "weber" ? gecs::weber_set(r)
                                         : gecs::low_weight_set(r, m);
  std::cout << "size: " << set.size() << '\n';
  if (out_path.empty())
    gecs::write_set(std::cout, set);
  else
    gecs::save_set(out_path, set);
  return kExitPass;
}

int cmd_verify(const std::string& set_path, std::optional<unsigned> r,
               unsigned m, unsigned jobs, bool fail_fast) {
  const gecs::GenericSet set = gecs::load_set(set_path);
  if (r && *r != set.dimension())
    throw std::invalid_argument("set file width does not match --r");
  const auto report = gecs::verify_generic(
      set, static_cast<unsigned>(set.dimension()), m, {jobs, fail_fast});
  gecs::write_report(std::cout, report);
  return report.pass ? kExitPass : kExitFail;
}

int cmd_search(unsigned r, unsigned m, std::optional<std::uint64_t> size,
               std::uint64_t seed, unsigned restarts, unsigned jobs) {
  const std::uint64_t budget = gecs::required_size_bound(r, m);
  std::cout << "budget: " << budget << '\n';
  const auto outcome =
      gecs::random_search(r, m, size.value_or(budget), seed, restarts, {jobs, false});
  std::cout << "found: " << (outcome.found ? "yes" : "no") << '\n';
  if (!outcome.found) return kExitFail;
  gecs::write_set(std::cout, *outcome.found);
  return kExitPass;
}

int cmd_checks(const std::string& set_path, const std::string& pcm_path,
               const std::string& out_path) {
  const gecs::GenericSet set = gecs::load_set(set_path);
  const gecs::Code code(gecs::load_matrix(pcm_path));
  const auto collection = gecs::generate_checks(set, code);
  std::cout << "checks: " << collection.size() << '\n';
  std::ostringstream buffer;
  for (const auto& h : collection.checks()) buffer << h.to_string() << '\n';
  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << buffer.str();
  }
  return kExitPass;
}

int cmd_decode(const std::string& checks_path, const std::string& word) {
  const gecs::BitMatrix raw = gecs::load_matrix(checks_path);
  gecs::CheckCollection checks(raw.col_count(), raw.rows());
  const auto received = gecs::ReceivedWord::from_string(word);
  if (received.length() != checks.length())
    throw std::invalid_argument("word length does not match the checks");
  const auto trace = gecs::peel_decode(checks, received);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& step = trace.steps[k];
    std::cout << "step " << k + 1 << ": check " << step.check_index + 1
              << " resolves pos " << step.position + 1 << " = " << step.value
              << '\n';
  }
  if (trace.decoded) {
    std::cout << "decoded: " << trace.word.to_string() << '\n';
    return kExitPass;
  }
  std::cout << "stuck: ";
  print_pattern(std::cout, trace.residual);
  std::cout << '\n';
  return kExitFail;
}

int cmd_stopping(const std::string& checks_path, std::size_t max_size,
                 const std::string& pcm_path) {
  const gecs::BitMatrix raw = gecs::load_matrix(checks_path);
  gecs::CheckCollection checks(raw.col_count(), raw.rows());
  std::optional<gecs::Code> code;
  if (!pcm_path.empty()) {
    code.emplace(gecs::load_matrix(pcm_path));
    if (code->length() != checks.length())
      throw std::invalid_argument("pcm length does not match the checks");
  }
  const auto sets = gecs::enumerate_stopping_sets(checks, max_size,
                                                  code ? &*code : nullptr);
  std::cout << "count: " << sets.size() << '\n';
  for (const auto& entry : sets) {
    print_pattern(std::cout, entry.positions);
    switch (entry.label) {
      case gecs::StoppingSetEntry::Label::correctable:
        std::cout << " correctable";
        break;
      case gecs::StoppingSetEntry::Label::codeword_support:
        std::cout << " codeword-support";
        break;
      case gecs::StoppingSetEntry::Label::unlabeled:
        break;
    }
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_bounds(unsigned r, unsigned m) {
  const auto report = gecs::bound_report(r, m);
  std::cout << "lower: " << report.lower << '\n';
  std::ostringstream coeff;
  coeff.precision(6);
  coeff << report.upper_coefficient;
  std::cout << "upper_coefficient: " << coeff.str() << '\n';
  std::cout << "upper: " << report.upper << '\n';
  std::cout << "construction: " << report.construction_size << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic (r,m)-erasure correcting sets: construct, certify, "
               "search, and drive the peeling decoder"};
  app.require_subcommand(1);

  unsigned r = 0, m = 0, jobs = 0, restarts = 20;
  std::uint64_t seed = 0;
  bool fail_fast = false;
  std::string kind, set_path, pcm_path, checks_path, out_path, word;
  std::optional<unsigned> opt_r;
  std::optional<std::uint64_t> opt_size;
  std::size_t max_size = 0;

  auto* genset = app.add_subcommand("genset", "construct a generic set");
  genset->add_option("kind", kind, "construction: arm or weber")
      ->required()
      ->check(CLI::IsMember({"arm", "weber"}));
  genset->add_option("--r", r, "dimension")->required();
  genset->add_option("--m", m, "erasure budget (arm only)");
  genset->add_option("--out", out_path, "output path (defaults to stdout)");

  auto* verify = app.add_subcommand("verify", "certify a set from a file");
  verify->add_option("set", set_path, "set file")->required();
  verify->add_option("--r", opt_r, "expected dimension");
  verify->add_option("--m", m, "erasure budget")->required();
  verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  verify->add_flag("--fail-fast", fail_fast,
                   "stop at the first counterexample (report order-dependent)");

  auto* search = app.add_subcommand("search", "randomized existence search");
  search->add_option("--r", r, "dimension")->required();
  search->add_option("--m", m, "erasure budget")->required();
  search->add_option("--size", opt_size, "vectors drawn per attempt");
  search->add_option("--seed", seed, "rng seed");
  search->add_option("--restarts", restarts, "maximum attempts");
  search->add_option("--jobs", jobs, "worker threads for verification");

  auto* checks = app.add_subcommand("checks", "generate parity checks {aH}");
  checks->add_option("set", set_path, "set file")->required();
  checks->add_option("pcm", pcm_path, "parity check matrix file")->required();
  checks->add_option("--out", out_path, "output path (defaults to stdout)");

  auto* decode = app.add_subcommand("decode", "peel a received word");
  decode->add_option("checks", checks_path, "check collection file")->required();
  decode->add_option("word", word, "received word over {0,1,?}")->required();

  auto* stopping = app.add_subcommand("stopping", "enumerate stopping sets");
  stopping->add_option("checks", checks_path, "check collection file")->required();
  stopping->add_option("pcm", pcm_path, "optional parity check matrix for labels");
  stopping->add_option("--max-size", max_size, "largest pattern size")->required();

  auto* bounds = app.add_subcommand("bounds", "size bounds for given r, m");
  bounds->add_option("--r", r, "dimension")->required();
  bounds->add_option("--m", m, "erasure budget")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (genset->parsed()) {
      if (kind == "arm" && m == 0)
        throw std::invalid_argument("genset arm requires --m");
      return cmd_genset(kind, r, m, out_path);
    }
    if (verify->parsed()) return cmd_verify(set_path, opt_r, m, jobs, fail_fast);
    if (search->parsed()) return cmd_search(r, m, opt_size, seed, restarts, jobs);
    if (checks->parsed()) return cmd_checks(set_path, pcm_path, out_path);
    if (decode->parsed()) return cmd_decode(checks_path, word);
    if (stopping->parsed()) return cmd_stopping(checks_path, max_size, pcm_path);
    if (bounds->parsed()) return cmd_bounds(r, m);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
