#include <algorithm>
#include <bit>
#include <set>

#include "builders.hpp"
#include "doctest.h"
#include "starcomp/errors.hpp"
#include "starcomp/graph/canonical.hpp"
#include "starcomp/star/context.hpp"
#include "starcomp/star/search.hpp"

using namespace starcomp;
using testutil::bits;

namespace {

const AlgebraicNumber kGolden = AlgebraicNumber::parse("root(-1,1):pos");

AlgebraicNumber num(long v) { return AlgebraicNumber(v); }

std::set<Mask> masks(const std::vector<CandidateVector>& cs) {
  std::set<Mask> out;
  for (const auto& c : cs) out.insert(c.bits);
  return out;
}

SearchOptions sweep(std::optional<std::size_t> max_x = std::nullopt) {
  SearchOptions o;
  o.mode = SearchOptions::Mode::Sweep;
  o.max_x = max_x;
  return o;
}

SearchOptions regular(std::size_t r) {
  SearchOptions o;
  o.mode = SearchOptions::Mode::Regular;
  o.r = r;
  return o;
}

// Checks the solution-level invariants shared by every search.
void check_solutions(const StarContext& ctx, const SearchResult& res) {
  for (const auto& s : res.solutions) {
    CHECK(s.cert.pass);
    CHECK(s.cert.reconstruction_ok);
    CHECK(s.cert.multiplicity == s.x.size());
    CHECK(s.x.size() <= std::max<std::size_t>(star_set_cap(ctx.q()), ctx.repeats_allowed() ? 1000 : 0));
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      for (std::size_t j = i + 1; j < s.x.size(); ++j) {
        CompatLabel l = classify_pair(ctx, s.x[i], s.x[j]);
        REQUIRE(l != CompatLabel::Incompatible);
        CHECK((l == CompatLabel::Adjacent) == s.ax.adjacent(i, j));
      }
    }
    if (s.regular_degree && !(ctx.mu().as_integer() && *ctx.mu().as_integer() == long(*s.regular_degree))) {
      for (const auto& c : s.x) CHECK(c.ones_pair == -ctx.mval());
    }
  }
}

}  // namespace

TEST_SUITE("context") {
  TEST_CASE("K33 at mu = 1") {
    auto ctx = StarContext::make(testutil::kts(3, 3), num(1), KtsTag{3, 3});
    CHECK(ctx.mval() == num(-8));
    CHECK(ctx.fast_path());
    CHECK(ctx.pairing(bits({0, 3}), bits({0, 3})) == num(-8));
    CHECK(ctx.pairing(0, bits({1, 2, 4})) == num(0));
    CHECK(ctx.pairing(bits({0, 3}), bits({1, 4})) == num(8));
    CHECK(ctx.pairing(std::vector<int>{1, 0, 0, 1, 0, 0}, std::vector<int>{0, 1, 0, 0, 1, 0}) == num(8));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(StarContext::make(testutil::kts(3, 3), num(3), KtsTag{3, 3}), MuIsEigenvalue);
    CHECK_THROWS_AS(StarContext::make(testutil::kts(3, 3), num(3)), MuIsEigenvalue);
    CHECK_THROWS_AS(StarContext::make(testutil::kts(3, 3), num(1), KtsTag{2, 4}), BadTag);
    CHECK_THROWS_AS(StarContext::make(testutil::cycle(6), num(1), KtsTag{3, 3}), BadTag);
    CHECK_THROWS_AS(StarContext::make(testutil::kts(2, 3), num(1), KtsTag{3, 2}), BadTag);
    CHECK_THROWS_AS(StarContext::make(Graph(65), num(1)), TooLarge);
  }

  TEST_CASE("generic complement C5 at mu = 1") {
    auto ctx = StarContext::make(testutil::cycle(5), num(1));
    CHECK_FALSE(ctx.fast_path());
    CHECK_FALSE(ctx.mval().is_zero());
  }

  TEST_CASE("K11 at mu = 0 falls back to the generic resolvent") {
    auto ctx = StarContext::make(testutil::kts(1, 1), num(0), KtsTag{1, 1});
    CHECK_FALSE(ctx.fast_path());
  }

  TEST_CASE("pairing is symmetric") {
    for (const auto& mu : {num(2), num(-2), kGolden}) {
      auto ctx = StarContext::make(testutil::path(5), mu);
      for (Mask x = 0; x < 32; x += 3) {
        for (Mask y = 0; y < 32; y += 5) CHECK(ctx.pairing(x, y) == ctx.pairing(y, x));
      }
    }
  }
}

TEST_SUITE("candidates") {
  TEST_CASE("K33, mu = 1: nine candidates of type (1,1)") {
    auto ctx = StarContext::make(testutil::kts(3, 3), num(1), KtsTag{3, 3});
    auto cs = enumerate_candidates(ctx, true);
    CHECK(cs.size() == 9);
    for (const auto& c : cs) {
      CHECK(c.type == VertexType{1, 1});
      CHECK(c.self_pair == ctx.mval() * ctx.mu());
    }
  }

  TEST_CASE("K66, mu = -2: only type (4,4)") {
    auto ctx = StarContext::make(testutil::kts(6, 6), num(-2), KtsTag{6, 6});
    auto cs = enumerate_candidates(ctx, true);
    CHECK(cs.size() == 225);
    for (const auto& c : cs) CHECK(c.type == VertexType{4, 4});
  }

  TEST_CASE("K12 at the golden root: type (0,1) only") {
    auto ctx = StarContext::make(testutil::kts(1, 2), kGolden, KtsTag{1, 2});
    auto cs = enumerate_candidates(ctx, true);
    REQUIRE_FALSE(cs.empty());
    for (const auto& c : cs) CHECK(c.type == VertexType{0, 1});
    // Direct check of all seven nonzero vectors.
    std::set<Mask> expect;
    for (Mask m = 1; m < 8; ++m) {
      if (ctx.pairing(m, m) == ctx.mval() * kGolden && ctx.candidate(m).ones_pair == -ctx.mval()) expect.insert(m);
    }
    CHECK(masks(cs) == expect);
  }

  TEST_CASE("typed and exhaustive enumeration agree for q <= 12") {
    int compared = 0;
    for (std::size_t t = 1; t <= 6; ++t) {
      for (std::size_t s = t; t + s <= 12; ++s) {
        std::vector<AlgebraicNumber> mus = {kGolden, AlgebraicNumber::parse("root(-1,-1):neg")};
        for (long m = -long(s); m <= long(s); ++m) mus.push_back(num(m));
        for (const auto& mu : mus) {
          if (mu.is_zero() || mu * mu == num(long(t * s))) continue;
          auto ctx = StarContext::make(testutil::kts(t, s), mu, KtsTag{t, s});
          for (bool nm : {false, true}) {
            CHECK(masks(enumerate_candidates(ctx, nm)) == masks(enumerate_candidates_brute_force(ctx, nm)));
            ++compared;
          }
        }
      }
    }
    CHECK(compared > 100);
  }

  TEST_CASE("exhaustive scan cap") {
    auto ctx = StarContext::make(testutil::path(31), num(3));
    CHECK_THROWS_AS(enumerate_candidates(ctx, true), TooLarge);
  }
}

TEST_SUITE("classify") {
  TEST_CASE("K33, mu = 1: rho 0 adjacent, rho 1 non-adjacent") {
    auto ctx = StarContext::make(testutil::kts(3, 3), num(1), KtsTag{3, 3});
    auto u = ctx.candidate(bits({0, 3}));
    CHECK(classify_pair(ctx, u, ctx.candidate(bits({1, 4}))) == CompatLabel::Adjacent);
    CHECK(classify_pair(ctx, u, ctx.candidate(bits({0, 4}))) == CompatLabel::NonAdjacent);
    CHECK_THROWS_AS(classify_pair(ctx, u, u), DuplicateNeighbourhood);
  }

  TEST_CASE("mu = -1: (1,s) against (t,1) sharing two vertices is adjacent") {
    auto ctx = StarContext::make(testutil::kts(2, 3), num(-1), KtsTag{2, 3});
    auto u = ctx.candidate(bits({0, 2, 3, 4}));  // (1,3)
    auto v = ctx.candidate(bits({0, 1, 2}));     // (2,1), rho = 2
    CHECK(classify_pair(ctx, u, v) == CompatLabel::Adjacent);
    // Equal neighbourhoods are allowed here and are adjacent (co-duplicates).
    CHECK(classify_pair(ctx, u, u) == CompatLabel::Adjacent);
  }

  TEST_CASE("K_{3,18}, mu = 2: labels of two (1,6) vertices by rho") {
    auto ctx = StarContext::make(testutil::kts(3, 18), num(2), KtsTag{3, 18});
    auto u = ctx.candidate(bits({0, 3, 4, 5, 6, 7, 8}));
    auto label = [&](std::initializer_list<std::size_t> v) { return classify_pair(ctx, u, ctx.candidate(bits(v))); };
    CHECK(label({0, 3, 4, 9, 10, 11, 12}) == CompatLabel::NonAdjacent);  // rho 3
    CHECK(label({0, 9, 10, 11, 12, 13, 14}) == CompatLabel::Adjacent);   // rho 1
    CHECK(label({1, 3, 9, 10, 11, 12, 13}) == CompatLabel::Adjacent);    // rho 1
    CHECK(label({1, 3, 4, 9, 10, 11, 12}) == CompatLabel::Incompatible); // rho 2
    CHECK(label({0, 3, 4, 5, 9, 10, 11}) == CompatLabel::Incompatible);  // rho 4
    for (std::size_t rho = 0; rho <= 7; ++rho) {
      auto p = kts_pairing(KtsTag{3, 18}, num(2), {1, 6}, {1, 6}, rho);
      CHECK(p == num(150 - 50 * long(rho)));
    }
  }
}

TEST_SUITE("search") {
  TEST_CASE("K33, mu = 1 sweep: three graphs of orders 9, 12, 15") {
    auto ctx = StarContext::make(testutil::kts(3, 3), num(1), KtsTag{3, 3});
    auto res = search_star_sets(ctx, sweep());
    REQUIRE(res.solutions.size() == 3);
    CHECK(res.deduped_by == "canonical");
    const std::size_t orders[] = {9, 12, 15};
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(res.solutions[i].g.order() == orders[i]);
      CHECK(res.solutions[i].regular_degree == orders[i] / 3 + 1);
    }
    check_solutions(ctx, res);
  }

  TEST_CASE("symmetry reduction and threads do not change the answer") {
    auto ctx = StarContext::make(testutil::kts(3, 3), num(1), KtsTag{3, 3});
    auto base = search_star_sets(ctx, sweep());
    SearchOptions plain = sweep();
    plain.symmetry = false;
    SearchOptions threaded = sweep();
    threaded.jobs = 4;
    for (const auto& o : {plain, threaded}) {
      auto res = search_star_sets(ctx, o);
      REQUIRE(res.solutions.size() == base.solutions.size());
      for (std::size_t i = 0; i < res.solutions.size(); ++i) {
        CHECK(res.solutions[i].key == base.solutions[i].key);
        CHECK(res.solutions[i].candidate_index == base.solutions[i].candidate_index);
      }
    }
  }

  TEST_CASE("mu = -t gives no regular graph") {
    for (auto [t, s] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 4}}) {
      auto ctx = StarContext::make(testutil::kts(t, s), num(-long(t)), KtsTag{t, s});
      CHECK(search_star_sets(ctx, sweep()).solutions.empty());
    }
  }

  TEST_CASE("K15, mu = 1 sweep: the Clebsch graph") {
    auto ctx = StarContext::make(testutil::kts(1, 5), num(1), KtsTag{1, 5});
    auto res = search_star_sets(ctx, sweep());
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].g.order() == 16);
    CHECK(srg_check(res.solutions[0].g) == SrgParams{16, 5, 0, 2});
    check_solutions(ctx, res);
  }

  TEST_CASE("K12 at the golden root gives C5, at -2 gives K22") {
    auto golden = StarContext::make(testutil::kts(1, 2), kGolden, KtsTag{1, 2});
    auto res = search_star_sets(golden, sweep());
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].key == canonical(testutil::cycle(5)).bytes);
    check_solutions(golden, res);

    auto minus_two = StarContext::make(testutil::kts(1, 2), num(-2), KtsTag{1, 2});
    res = search_star_sets(minus_two, sweep());
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].key == canonical(testutil::kts(2, 2)).bytes);
    check_solutions(minus_two, res);
  }

  TEST_CASE("K66, mu = -2 at r = 8 and r = 10") {
    auto ctx = StarContext::make(testutil::kts(6, 6), num(-2), KtsTag{6, 6});
    for (std::size_t r : {8u, 10u}) {
      auto res = search_star_sets(ctx, regular(r));
      REQUIRE_FALSE(res.solutions.empty());
      for (const auto& s : res.solutions) {
        CHECK(s.regular_degree == r);
        CHECK(s.x.size() == 3 * (r - 6) / 2);
      }
      check_solutions(ctx, res);
    }
  }

  TEST_CASE("generic complement agrees with the tagged one") {
    auto tagged = StarContext::make(testutil::kts(3, 3), num(1), KtsTag{3, 3});
    auto generic = StarContext::make(testutil::kts(3, 3), num(1));
    auto a = search_star_sets(tagged, sweep());
    auto b = search_star_sets(generic, sweep());
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) CHECK(a.solutions[i].key == b.solutions[i].key);
  }

  TEST_CASE("mu in {-1, 0} needs a cap") {
    auto ctx = StarContext::make(testutil::kts(2, 3), num(-1), KtsTag{2, 3});
    CHECK_THROWS_AS(search_star_sets(ctx, sweep()), Unbounded);
    auto res = search_star_sets(ctx, sweep(4));
    check_solutions(ctx, res);
    for (const auto& s : res.solutions) CHECK(s.x.size() <= 4);
  }

  TEST_CASE("maximal mode on C5 complements") {
    auto ctx = StarContext::make(testutil::cycle(5), num(1));
    SearchOptions o;
    o.non_main = false;
    auto res = search_star_sets(ctx, o);
    REQUIRE_FALSE(res.solutions.empty());
    check_solutions(ctx, res);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("Petersen with the inner pentagon as star set") {
    auto cert = verify_star_pair(testutil::petersen(), {5, 6, 7, 8, 9}, num(1));
    CHECK(cert.pass);
    CHECK(cert.multiplicity == 5);
  }

  TEST_CASE("C5 with two adjacent vertices at the golden root") {
    auto cert = verify_star_pair(testutil::cycle(5), {0, 1}, kGolden);
    CHECK(cert.pass);
    CHECK(cert.multiplicity == 2);
  }

  TEST_CASE("K22 with one vertex at -2") {
    auto cert = verify_star_pair(testutil::kts(2, 2), {3}, num(-2));
    CHECK(cert.pass);
    CHECK(cert.multiplicity == 1);
  }

  TEST_CASE("failures are reported, not thrown") {
    auto cert = verify_star_pair(testutil::petersen(), {5, 6, 7, 8}, num(1));
    CHECK_FALSE(cert.pass);
    cert = verify_star_pair(testutil::petersen(), {0, 2, 5, 7, 9}, num(1));
    CHECK_FALSE(cert.pass);
    cert = verify_star_pair(testutil::cycle(4), {0, 0}, num(1));
    CHECK_FALSE(cert.pass);
  }
}
