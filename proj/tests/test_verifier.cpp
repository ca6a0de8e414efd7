#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gecs/constructions.hpp"
#include "gecs/search.hpp"
#include "gecs/verify.hpp"

using namespace gecs;

namespace {

GenericSet set_of(std::size_t r, std::initializer_list<const char*> strings) {
  std::vector<BitVec> members;
  for (const char* s : strings) members.push_back(BitVec::from_string(s));
  return GenericSet(r, std::move(members));
}

// Independent reference for verify_generic at m <= 2: scan ALL ordered
// r x m matrices of rank m (as column tuples) and ask for a member whose
// product has weight one, using BitVec arithmetic only.
bool ordered_matrix_oracle(const GenericSet& set, unsigned r, unsigned m) {
  REQUIRE(m <= 2);
  const std::uint32_t top = (1u << r) - 1;
  const auto covered_by_someone = [&](const std::vector<BitVec>& cols) {
    for (const auto& a : set.members()) {
      unsigned hits = 0;
      for (const auto& c : cols) hits += dot(a, c);
      if (hits == 1) return true;
    }
    return false;
  };
  if (m == 1) {
    for (std::uint32_t c = 1; c <= top; ++c)
      if (!covered_by_someone({BitVec::from_uint(c, r)})) return false;
    return true;
  }
  for (std::uint32_t c1 = 1; c1 <= top; ++c1)
    for (std::uint32_t c2 = 1; c2 <= top; ++c2) {
      if (c1 == c2) continue;  // two distinct nonzero vectors have rank 2
      if (!covered_by_someone({BitVec::from_uint(c1, r), BitVec::from_uint(c2, r)}))
        return false;
    }
  return true;
}

GenericSet random_candidate(unsigned r, std::mt19937_64& rng) {
  const std::uint32_t top = (1u << r) - 1;
  const std::size_t size = 1 + rng() % top;
  std::set<std::uint32_t> chosen;
  while (chosen.size() < size) chosen.insert(1 + rng() % top);
  return GenericSet::from_encodings(
      r, std::vector<std::uint32_t>(chosen.begin(), chosen.end()));
}

BitMatrix random_full_column_rank(unsigned r, unsigned m, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix mtx(r, m);
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < m; ++j) mtx.set(i, j, rng() & 1);
    if (rank(mtx) == m) return mtx;
  }
}

}  // namespace

TEST_CASE("spans") {
  CHECK(spans(set_of(3, {"100", "010", "001"}), 3));
  CHECK_FALSE(spans(set_of(3, {"110", "101"}), 3));
  for (unsigned r = 2; r <= 8; ++r)
    for (unsigned m = 2; m <= r; ++m) CHECK(spans(low_weight_set(r, m), r));
  CHECK_THROWS_AS(spans(set_of(3, {"100"}), 4), std::invalid_argument);
}

TEST_CASE("verify_generic passes the hand-checked small instances") {
  const auto report = verify_generic(low_weight_set(3, 2), 3, 2);
  CHECK(report.pass);
  CHECK(report.matrices_checked == 21);
  CHECK(report.deterministic);
  CHECK_FALSE(report.counterexample.has_value());

  const auto tiny = verify_generic(set_of(2, {"10", "01"}), 2, 2);
  CHECK(tiny.pass);
  CHECK(tiny.matrices_checked == 3);
}

TEST_CASE("verify_generic fails a non-spanning set via the parity certificate") {
  const GenericSet a = set_of(3, {"110", "101", "011"});
  const auto report = verify_generic(a, 3, 2);
  CHECK_FALSE(report.pass);
  CHECK(report.matrices_checked == 0);  // rejected before enumeration
  REQUIRE(report.counterexample.has_value());
  const auto& columns = *report.counterexample;
  REQUIRE(columns.size() == 2);
  // the counterexample is a rank-m matrix no member covers in any order
  std::vector<std::uint32_t> encodings;
  for (const auto& c : columns) encodings.push_back(c.to_uint());
  CHECK(xor_basis_rank(encodings) == 2);
  for (const auto& member : a.members()) {
    unsigned hits = 0;
    for (const auto& c : columns) hits += dot(member, c);
    CHECK(hits != 1);
  }
}

TEST_CASE("verify_generic agrees with the ordered-matrix oracle (r <= 4, m <= 2)") {
  std::mt19937_64 rng(101);
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned m = 1; m <= std::min(r, 2u); ++m) {
      if (m >= 2) {
        const auto constructed = low_weight_set(r, std::max(m, 2u));
        CHECK(verify_generic(constructed, r, m).pass ==
              ordered_matrix_oracle(constructed, r, m));
      }
      for (int trial = 0; trial < 50; ++trial) {
        const GenericSet a = random_candidate(r, rng);
        CHECK(verify_generic(a, r, m).pass == ordered_matrix_oracle(a, r, m));
      }
    }
  }
}

TEST_CASE("verification at m = 1 is exactly the spanning test") {
  std::mt19937_64 rng(7);
  for (unsigned r = 1; r <= 5; ++r)
    for (int trial = 0; trial < 30; ++trial) {
      const GenericSet a = random_candidate(r, rng);
      CHECK(verify_generic(a, r, 1).pass == spans(a, r));
    }
}

TEST_CASE("the full space minus zero is always generic") {
  for (unsigned r = 1; r <= 5; ++r) {
    std::vector<std::uint32_t> all;
    for (std::uint32_t v = 1; v < (1u << r); ++v) all.push_back(v);
    const GenericSet everything = GenericSet::from_encodings(r, all);
    for (unsigned m = 1; m <= r; ++m)
      CHECK(verify_generic(everything, r, m).pass);
  }
}

TEST_CASE("genericity is invariant under invertible right-transforms") {
  std::mt19937_64 rng(55);
  for (unsigned r = 2; r <= 5; ++r)
    for (unsigned m = 1; m <= 2; ++m)
      for (int trial = 0; trial < 10; ++trial) {
        const GenericSet a = random_candidate(r, rng);
        const BitMatrix t = random_invertible(r, rng());
        CHECK(verify_generic(a, r, m).pass ==
              verify_generic(apply_transform(a, t), r, m).pass);
      }
}

TEST_CASE("monotonicity: a pass at m implies a pass at every smaller budget") {
  for (unsigned r = 2; r <= 7; ++r)
    for (unsigned m = 2; m <= std::min(r, 4u); ++m) {
      const auto set = low_weight_set(r, m);
      REQUIRE(verify_generic(set, r, m).pass);
      for (unsigned mp = 1; mp < m; ++mp)
        CHECK(verify_generic(set, r, mp).pass);
    }
}

TEST_CASE("parallel and serial verification produce identical reports") {
  // pass case
  const auto pass_serial = verify_generic(low_weight_set(6, 2), 6, 2, {1, false});
  const auto pass_parallel = verify_generic(low_weight_set(6, 2), 6, 2, {4, false});
  CHECK(pass_serial.pass == pass_parallel.pass);
  CHECK(pass_serial.matrices_checked == pass_parallel.matrices_checked);

  // fail case: the unit basis is not generic at m = 3
  const GenericSet basis = set_of(3, {"100", "010", "001"});
  const auto fail_serial = verify_generic(basis, 3, 3, {1, false});
  const auto fail_parallel = verify_generic(basis, 3, 3, {4, false});
  CHECK_FALSE(fail_serial.pass);
  CHECK_FALSE(fail_parallel.pass);
  CHECK(fail_serial.matrices_checked == fail_parallel.matrices_checked);
  REQUIRE(fail_serial.counterexample.has_value());
  REQUIRE(fail_parallel.counterexample.has_value());
  CHECK(*fail_serial.counterexample == *fail_parallel.counterexample);

  // fail-fast mode still finds some counterexample but gives up canonicality
  const auto ff = verify_generic(basis, 3, 3, {4, true});
  CHECK_FALSE(ff.pass);
  CHECK_FALSE(ff.deterministic);
  REQUIRE(ff.counterexample.has_value());
  std::vector<std::uint32_t> encodings;
  for (const auto& c : *ff.counterexample) encodings.push_back(c.to_uint());
  CHECK(xor_basis_rank(encodings) == 3);
}

TEST_CASE("verify_generic rejects bad parameters") {
  CHECK_THROWS_AS(verify_generic(set_of(2, {"10"}), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_generic(set_of(2, {"10"}), 3, 2), std::invalid_argument);
}

TEST_CASE("report rendering follows the line format") {
  VerificationReport report;
  report.pass = false;
  report.matrices_checked = 21;
  report.elapsed = std::chrono::duration<double, std::milli>(1.4);
  report.counterexample = {BitVec::from_string("010"), BitVec::from_string("101")};
  std::ostringstream out;
  write_report(out, report);
  CHECK(out.str() ==
        "status: FAIL\nmatrices_checked: 21\nelapsed_ms: 1\n"
        "counterexample: 010 101\n");
}

TEST_CASE("count_good_vectors") {
  CHECK(count_good_vectors(BitMatrix::identity(4)) == 4);
  std::mt19937_64 rng(3);
  CHECK(count_good_vectors(random_full_column_rank(4, 2, rng)) == 8);
  CHECK(count_good_vectors(random_full_column_rank(5, 3, rng)) == 12);
  CHECK_THROWS_AS(count_good_vectors(BitMatrix::from_strings({"11", "11"})),
                  std::invalid_argument);
}

TEST_CASE("count_good_vectors equals m 2^(r-m) on random full-rank matrices") {
  std::mt19937_64 rng(9);
  for (unsigned r = 1; r <= 6; ++r)
    for (unsigned m = 1; m <= r; ++m)
      for (int trial = 0; trial < 20; ++trial)
        CHECK(count_good_vectors(random_full_column_rank(r, m, rng)) ==
              std::uint64_t{m} << (r - m));
}

TEST_CASE("required_size_bound") {
  CHECK(required_size_bound(5, 2, true) == 10);   // log2(930) ~ 9.86
  CHECK(required_size_bound(5, 2, false) == 11);  // strictly above 10
  CHECK(required_size_bound(1, 1, true) == 1);
  CHECK(required_size_bound(1, 1, false) == 2);
  CHECK_THROWS_AS(required_size_bound(2, 3, true), std::invalid_argument);
}

TEST_CASE("random_search is deterministic and certifies what it returns") {
  const auto a = random_search(5, 2, 10, 1, 20);
  const auto b = random_search(5, 2, 10, 1, 20);
  CHECK(a.restarts_used == b.restarts_used);
  CHECK(a.budget == 10);
  REQUIRE(a.found.has_value());
  REQUIRE(b.found.has_value());
  CHECK(*a.found == *b.found);
  CHECK(verify_generic(*a.found, 5, 2).pass);

  // one vector can never span a 2-dimensional space
  const auto hopeless = random_search(2, 1, 1, 0, 5);
  CHECK_FALSE(hopeless.found.has_value());
  CHECK(hopeless.restarts_used == 5);

  // the only nonzero vector of F_2^1 works
  const auto tiny = random_search(1, 1, 1, 0, 64);
  REQUIRE(tiny.found.has_value());
  CHECK(tiny.found->encodings() == std::vector<std::uint32_t>{1});
}

TEST_CASE("min_generic_size on tiny instances") {
  CHECK(min_generic_size(2, 2, 4) == 2);
  CHECK(min_generic_size(3, 2, 8) == 3);
  // no 3-element set works at (3,3): every spanning triple is a basis and
  // equivalent to the unit basis, which misses e.g. columns {110,101,111}
  CHECK(min_generic_size(3, 3, 8) == 4);
  CHECK_FALSE(min_generic_size(3, 3, 3).has_value());
  CHECK_THROWS_AS(min_generic_size(5, 2, 5), std::invalid_argument);
}
