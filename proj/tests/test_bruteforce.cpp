#include <doctest.h>

#include <map>

#include "kacq/bruteforce.hpp"
#include "kacq/errors.hpp"

using namespace kacq;

namespace {

Int ipow(long b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Rat rpow(long b, int e) {
  Rat r = 1;
  if (e >= 0) return Rat(ipow(b, e));
  return Rat(1) / Rat(ipow(b, -e));
}

template <class F>
void expect_error(ErrorKind k, F&& f) {
  bool thrown = false;
  try {
    f();
  } catch (const Error& e) {
    thrown = true;
    CHECK(e.kind() == k);
  }
  CHECK(thrown);
}

// all rank vectors 0 <= r <= bound, componentwise
std::vector<RankVector> box(const RankVector& bound) {
  std::vector<RankVector> out{RankVector(bound.size(), 0)};
  for (size_t i = 0; i < bound.size(); ++i) {
    std::vector<RankVector> next;
    for (const auto& r : out)
      for (int v = 0; v <= bound[i]; ++v) {
        auto s = r;
        s[i] = v;
        next.push_back(s);
      }
    out = std::move(next);
  }
  return out;
}

bool leq(const RankVector& a, const RankVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_zero_vec(const RankVector& r) {
  for (int v : r)
    if (v) return false;
  return true;
}

RankVector scaled(const RankVector& r, int m) {
  auto s = r;
  for (auto& v : s) v *= m;
  return s;
}

RankVector plus(const RankVector& a, const RankVector& b) {
  auto s = a;
  for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

using Multi = std::map<RankVector, Rat>;

Multi multiply(const Multi& a, const Multi& b, const RankVector& bound) {
  Multi c;
  for (const auto& [ra, va] : a)
    for (const auto& [rb, vb] : b) {
      auto r = plus(ra, rb);
      if (leq(r, bound)) c[r] += va * vb;
    }
  return c;
}

// exp(sum_m c(m) s^m / m) in one variable, up to s^K
std::vector<Rat> exp_series(const std::vector<Rat>& h, int K) {
  std::vector<Rat> g(static_cast<size_t>(K + 1));
  g[0] = 1;
  for (int n = 1; n <= K; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rat(k) * h[static_cast<size_t>(k)] * g[static_cast<size_t>(n - k)];
    g[static_cast<size_t>(n)] = acc / Rat(n);
  }
  return g;
}

}  // namespace

TEST_CASE("representation space indexing") {
  RepSpace S(Quiver::kronecker(2), 2, {1, 2}, 3);
  CHECK(S.num_entries() == 4);
  CHECK(S.size() == 6561);
  for (std::uint64_t i : {0ULL, 1ULL, 80ULL, 4000ULL, 6560ULL}) {
    auto p = S.decode(i);
    REQUIRE(p.x.size() == 2);
    CHECK(p.x[0].rows == 2);
    CHECK(p.x[0].cols == 1);
    CHECK(S.encode(p) == i);
  }
  auto p = S.decode(1);
  CHECK(p.x[0](0, 0) == 1);
  CHECK(p.x[1](1, 0) == 0);
  expect_error(ErrorKind::CapExceeded, [] {
    BruteConfig cfg;
    cfg.max_space_log2 = 7;
    RepSpace T(Quiver::gloop(2), 1, {2}, 2, cfg);
  });
  expect_error(ErrorKind::DimensionMismatch, [] { RepSpace T(Quiver::a2(), 1, {1}, 2); });
}

TEST_CASE("orbit examples") {
  auto J = enumerate_orbits(Quiver::jordan(), 1, {1}, 2);
  REQUIRE(J.size() == 2);
  for (const auto& o : J) {
    CHECK(o.indecomposable);
    CHECK(o.absolutely_indecomposable);
    CHECK(o.orbit_size == 1);
  }
  CHECK(count_abs_indecomposable(Quiver::jordan(), 1, {1}, 2) == 2);

  auto A = enumerate_orbits(Quiver::a2(), 2, {1, 1}, 2);
  REQUIRE(A.size() == 3);
  int ind = 0;
  std::uint64_t total = 0;
  for (const auto& o : A) {
    ind += o.indecomposable;
    total += o.orbit_size;
  }
  CHECK(ind == 2);
  CHECK(total == 4);
  CHECK(count_abs_indecomposable(Quiver::a2(), 2, {1, 1}, 2) == 2);
}

TEST_CASE("two-loop quiver rank 2 absolutely indecomposables") {
  // q^5 + q^3 from the rank-2 closed form with g = 2, alpha = 1
  CHECK(count_abs_indecomposable(Quiver::gloop(2), 1, {2}, 2) == 40);
}

TEST_CASE("iso class counts") {
  CHECK(count_iso_classes(Quiver::jordan(), 1, {1}, 3) == 3);
  CHECK(count_iso_classes(Quiver::jordan(), 2, {1}, 2) == 4);
  CHECK(count_iso_classes(Quiver::a2(), 1, {1, 1}, 2) == 2);
  CHECK(count_iso_classes(Quiver::jordan(), 1, {0}, 2) == 1);
}

TEST_CASE("Jordan rank 2 over F_q") {
  for (int q : {2, 3}) {
    auto orbits = enumerate_orbits(Quiver::jordan(), 1, {2}, q);
    CHECK(static_cast<long>(orbits.size()) == q * q + q);
    long ind = 0, abs_ind = 0;
    for (const auto& o : orbits) {
      ind += o.indecomposable;
      abs_ind += o.absolutely_indecomposable;
      if (o.indecomposable && !o.absolutely_indecomposable) CHECK(o.top_degree == 2);
    }
    CHECK(ind == q + (q * q - q) / 2);
    CHECK(abs_ind == q);
  }
}

TEST_CASE("Burnside count equals orbit count") {
  struct Case {
    Quiver Q;
    int alpha;
    RankVector r;
    int q;
  };
  std::vector<Case> cases = {
      {Quiver::jordan(), 1, {2}, 2}, {Quiver::jordan(), 1, {2}, 3}, {Quiver::jordan(), 2, {2}, 2},
      {Quiver::a2(), 2, {2, 1}, 2},  {Quiver::a2(), 1, {2, 2}, 3},  {Quiver::kronecker(2), 1, {1, 1}, 3},
      {Quiver::kronecker(2), 2, {1, 1}, 2}, {Quiver::cycle(3), 1, {1, 1, 1}, 2}, {Quiver::gloop(2), 1, {2}, 2},
      {Quiver::kronecker(3), 1, {1, 2}, 2}, {Quiver::jordan(), 1, {1}, 4}, {Quiver::a2(), 1, {1, 1}, 9},
  };
  for (const auto& c : cases) {
    auto orbits = enumerate_orbits(c.Q, c.alpha, c.r, c.q);
    std::uint64_t total = 0;
    for (const auto& o : orbits) total += o.orbit_size;
    RepSpace S(c.Q, c.alpha, c.r, c.q);
    CHECK(total == S.size());
    CHECK(count_iso_classes(c.Q, c.alpha, c.r, c.q) == Int(static_cast<long>(orbits.size())));
  }
}

TEST_CASE("orbit records: stabiliser and ratio law") {
  struct Case {
    Quiver Q;
    int alpha;
    RankVector r;
    int q;
  };
  std::vector<Case> cases = {
      {Quiver::jordan(), 1, {2}, 3}, {Quiver::jordan(), 2, {2}, 2}, {Quiver::a2(), 2, {2, 1}, 2},
      {Quiver::kronecker(2), 2, {1, 1}, 2}, {Quiver::cycle(3), 2, {1, 1, 1}, 2}, {Quiver::gloop(2), 1, {2}, 2},
      {Quiver::a2(), 2, {2, 2}, 2},
  };
  for (const auto& c : cases) {
    Int full = gl_order(c.q, c.alpha, c.r);
    for (const auto& o : enumerate_orbits(c.Q, c.alpha, c.r, c.q)) {
      CHECK(Int(static_cast<unsigned long>(o.orbit_size)) * o.aut_size == full);
      Rat ratio = Rat(o.aut_size) / Rat(ipow(c.q, o.end_exp));
      if (o.indecomposable) {
        CHECK(o.top_degree >= 1);
        CHECK(ratio == Rat(1) - rpow(c.q, -o.top_degree));
        int rsum = 0;
        for (int v : c.r) rsum += v;
        CHECK(o.top_degree <= rsum);
      } else {
        CHECK_FALSE(o.absolutely_indecomposable);
        CHECK(o.top_degree == 0);
      }
      CHECK(o.absolutely_indecomposable == (o.indecomposable && o.top_degree == 1));
      CHECK(o.locality_exhaustive);
    }
  }
}

TEST_CASE("Krull-Schmidt identity") {
  struct Case {
    Quiver Q;
    int alpha;
    RankVector bound;
    int q;
  };
  std::vector<Case> cases = {
      {Quiver::jordan(), 1, {2}, 2}, {Quiver::jordan(), 2, {2}, 2}, {Quiver::jordan(), 1, {2}, 3},
      {Quiver::a2(), 1, {2, 2}, 2},  {Quiver::a2(), 2, {2, 2}, 2},
  };
  for (const auto& c : cases) {
    auto ranks = box(c.bound);
    Multi prod{{RankVector(c.bound.size(), 0), Rat(1)}};
    for (const auto& r : ranks) {
      if (is_zero_vec(r)) continue;
      long ind = 0;
      for (const auto& o : enumerate_orbits(c.Q, c.alpha, r, c.q)) ind += o.indecomposable;
      // (1 - t^r)^{-ind} = sum_k binom(ind + k - 1, k) t^{k r}
      Multi f;
      Rat coef = 1;
      for (int k = 0; leq(scaled(r, k), c.bound); ++k) {
        f[scaled(r, k)] = coef;
        coef = coef * Rat(ind + k) / Rat(k + 1);
      }
      prod = multiply(prod, f, c.bound);
    }
    for (const auto& r : ranks) CHECK(prod[r] == Rat(count_iso_classes(c.Q, c.alpha, r, c.q)));
  }
}

TEST_CASE("moment map fibre: three methods agree") {
  struct Case {
    Quiver Q;
    int alpha;
    RankVector r;
    int q;
  };
  std::vector<Case> cases = {
      {Quiver::jordan(), 1, {2}, 2}, {Quiver::jordan(), 1, {2}, 3}, {Quiver::a2(), 2, {1, 1}, 2},
      {Quiver::a2(), 2, {2, 1}, 2},  {Quiver::cycle(3), 1, {1, 1, 1}, 2}, {Quiver::cycle(3), 2, {1, 1, 1}, 2},
      {Quiver::kronecker(2), 1, {1, 1}, 3}, {Quiver::kronecker(2), 2, {1, 1}, 2}, {Quiver::gloop(2), 1, {2}, 2},
  };
  for (const auto& c : cases) {
    Int naive = moment_fiber_count(c.Q, c.alpha, c.r, c.q, {}, FiberMethod::Naive);
    CHECK(moment_fiber_count(c.Q, c.alpha, c.r, c.q, {}, FiberMethod::DirectKernel) == naive);
    CHECK(moment_fiber_count(c.Q, c.alpha, c.r, c.q, {}, FiberMethod::EndFormula) == naive);
  }
  // commuting pairs in gl_2(F_q): q^6 + q^5 - q^3
  for (int q : {2, 3})
    CHECK(moment_fiber_count(Quiver::jordan(), 1, {2}, q) == ipow(q, 6) + ipow(q, 5) - ipow(q, 3));
}

TEST_CASE("fibre over each point from the endomorphism count") {
  struct Case {
    Quiver Q;
    int alpha;
    RankVector r;
    int q;
  };
  std::vector<Case> cases = {
      {Quiver::jordan(), 2, {2}, 2}, {Quiver::kronecker(3), 1, {1, 2}, 2}, {Quiver::cycle(3), 2, {1, 1, 1}, 2},
      {Quiver::a2(), 2, {2, 2}, 2},
  };
  for (const auto& c : cases) {
    RepSpace S(c.Q, c.alpha, c.r, c.q);
    long rr = euler_form(c.Q, c.r, c.r);
    for (std::uint64_t i = 0; i < S.size(); ++i) {
      auto p = S.decode(i);
      int e = kernel_size(S.ring(), end_system(S.ring(), c.Q, c.r, p));
      int f = kernel_size(S.ring(), moment_system(S.ring(), c.Q, c.r, p));
      CHECK(f == e - c.alpha * rr);
    }
  }
}

TEST_CASE("two-loop fibre closed form at q = 2") {
  // (q^4-1)/(q^3(q-1)) q^13 - (q^3-1)/(q^3(q-1)) q^12 at q = 2
  CHECK(moment_fiber_count(Quiver::gloop(2), 1, {2}, 2) == 11776);
  CHECK(moment_fiber_count(Quiver::gloop(2), 1, {2}, 2, {}, FiberMethod::EndFormula) == 11776);
}

TEST_CASE("deformed fibres") {
  CHECK(moment_fiber_count(Quiver::a2(), 1, {1, 1}, 3, {1, -1}) == 2);
  CHECK(moment_fiber_count(Quiver::a2(), 1, {1, 1}, 3, {1, -1}, FiberMethod::Naive) == 2);
  // xy = t in O_2 over F_3: x = t u, y = u^{-1} + t c, or the symmetric choice
  CHECK(moment_fiber_count(Quiver::a2(), 2, {1, 1}, 3, {1, -1}) ==
        moment_fiber_count(Quiver::a2(), 2, {1, 1}, 3, {1, -1}, FiberMethod::Naive));
  CHECK(moment_fiber_count(Quiver::kronecker(2), 1, {1, 1}, 5, {2, -2}) ==
        moment_fiber_count(Quiver::kronecker(2), 1, {1, 1}, 5, {2, -2}, FiberMethod::Naive));
  CHECK(moment_fiber_count(Quiver::cycle(3), 1, {1, 1, 1}, 5, {1, 1, -2}) ==
        moment_fiber_count(Quiver::cycle(3), 1, {1, 1, 1}, 5, {1, 1, -2}, FiberMethod::Naive));

  expect_error(ErrorKind::NonGenericLambda, [] { moment_fiber_count(Quiver::a2(), 1, {1, 1}, 3, {1, 1}); });
  expect_error(ErrorKind::CharacteristicTooSmall, [] { moment_fiber_count(Quiver::a2(), 1, {1, 1}, 2, {1, -1}); });
  expect_error(ErrorKind::DimensionMismatch, [] { moment_fiber_count(Quiver::a2(), 1, {1, 1}, 3, {1}); });
  expect_error(ErrorKind::InvalidArgument, [] {
    moment_fiber_count(Quiver::a2(), 1, {1, 1}, 3, {1, -1}, FiberMethod::EndFormula);
  });
  expect_error(ErrorKind::CapExceeded, [] {
    BruteConfig cfg;
    cfg.max_space_log2 = 7;
    moment_fiber_count(Quiver::gloop(2), 1, {2}, 2, {}, FiberMethod::DirectKernel, cfg);
  });
}

TEST_CASE("generic count matches the A-count") {
  // #mu^{-1}(lambda)/|GL| = q^{-<r,r>} A / (1 - q^{-1}) for generic lambda, indivisible r
  struct Case {
    Quiver Q;
    RankVector r;
    std::vector<int> lambda;
    int q;
  };
  std::vector<Case> cases = {
      {Quiver::a2(), {1, 1}, {1, -1}, 3},
      {Quiver::kronecker(2), {1, 1}, {1, -1}, 3},
      {Quiver::cycle(3), {1, 1, 1}, {1, 1, -2}, 5},
      {Quiver::kronecker(3), {1, 2}, {2, -1}, 5},
  };
  for (const auto& c : cases) {
    REQUIRE(is_generic(c.lambda, c.r));
    Rat lhs = Rat(moment_fiber_count(c.Q, 1, c.r, c.q, c.lambda)) / Rat(gl_order(c.q, 1, c.r));
    Rat A = count_abs_indecomposable(c.Q, 1, c.r, c.q);
    Rat rhs = rpow(c.q, static_cast<int>(-euler_form(c.Q, c.r, c.r))) * A / (Rat(1) - Rat(1, c.q));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("genericity") {
  CHECK(is_generic({1, -1}, {1, 1}));
  CHECK_FALSE(is_generic({1, 1}, {1, 1}));
  CHECK_FALSE(is_generic({0, 0}, {1, 1}));
  CHECK(is_generic({0}, {1}));
  CHECK_FALSE(is_generic({1, -1}, {2, 2}));
  CHECK(is_generic({2, -1}, {1, 2}));
  CHECK_FALSE(is_generic({1, 0, -1}, {1, 1, 1}));
}

TEST_CASE("empty representation") {
  CHECK(moment_fiber_count(Quiver::a2(), 1, {0, 0}, 2) == 1);
  CHECK(moment_fiber_count(Quiver::gloop(3), 2, {0}, 3) == 1);
}

TEST_CASE("jet counts") {
  auto N = jet_counts(Quiver::jordan(), {1}, 3, 3);
  REQUIRE(N.size() == 3);
  for (int n = 1; n <= 3; ++n) CHECK(N[static_cast<size_t>(n - 1)] == ipow(3, 2 * n));
  auto K = jet_counts(Quiver::kronecker(3), {1, 2}, 2, 2);
  for (int n = 1; n <= 2; ++n)
    CHECK(K[static_cast<size_t>(n - 1)] == moment_fiber_count(Quiver::kronecker(3), n, {1, 2}, 2));
}

TEST_CASE("ASK counts") {
  LinearFamily id{1, 1, {{1}}};
  auto a = ask_counts(id, 2, 3);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Rat(3, 2));
  // q^{-n} sum_v #(val v) q^v = n(q-1)/q + 1
  for (int q : {2, 3, 5}) {
    auto b = ask_counts(id, q, 3);
    for (int n = 1; n <= 3; ++n) CHECK(b[static_cast<size_t>(n - 1)] == Rat(n) * Rat(q - 1, q) + 1);
  }
  LinearFamily zero{2, 3, {{0, 0, 0, 0, 0, 0}}};
  auto z = ask_counts(zero, 2, 3);
  for (int n = 1; n <= 3; ++n) CHECK(z[static_cast<size_t>(n - 1)] == Rat(ipow(2, 3 * n)));
  // theta(a) = a on the 1x1 commutator y |-> xy - yx of the Jordan quiver is zero
  LinearFamily comm{1, 1, {{0}}};
  auto c = ask_counts(comm, 3, 2);
  for (int n = 1; n <= 2; ++n) CHECK(c[static_cast<size_t>(n - 1)] == Rat(ipow(3, n)));
  // two-parameter family [[a, b]]: kernel on O^2 of a row vector
  LinearFamily row{1, 2, {{1, 0}, {0, 1}}};
  auto r = ask_counts(row, 2, 2);
  // n = 1: (0,0) gives 4, the other 3 give 2: (4 + 6)/4
  CHECK(r[0] == Rat(5, 2));
  expect_error(ErrorKind::CapExceeded, [&] {
    BruteConfig cfg;
    cfg.max_space_log2 = 4;
    ask_counts(row, 2, 3, cfg);
  });
}

TEST_CASE("plethystic identity at a fixed q") {
  struct Case {
    Quiver Q;
    int alpha;
    RankVector bound;
    int q;
  };
  std::vector<Case> cases = {
      {Quiver::jordan(), 1, {2}, 2}, {Quiver::jordan(), 2, {2}, 2}, {Quiver::a2(), 1, {1, 1}, 2},
      {Quiver::a2(), 1, {2, 1}, 2},  {Quiver::a2(), 2, {2, 1}, 2},  {Quiver::kronecker(2), 1, {2, 1}, 2},
  };
  for (const auto& c : cases) {
    auto ranks = box(c.bound);
    Multi rhs{{RankVector(c.bound.size(), 0), Rat(1)}};
    for (const auto& r : ranks) {
      if (is_zero_vec(r)) continue;
      int K = 0;
      while (leq(scaled(r, K + 1), c.bound)) ++K;
      std::vector<Rat> h(static_cast<size_t>(K + 1));
      for (int m = 1; m <= K; ++m) {
        int qm = static_cast<int>(ipow(c.q, m).get_si());
        Rat A = count_abs_indecomposable(c.Q, c.alpha, r, qm);
        h[static_cast<size_t>(m)] = A / (Rat(1) - Rat(1, qm)) / Rat(m);
      }
      auto g = exp_series(h, K);
      Multi f;
      for (int k = 0; k <= K; ++k) f[scaled(r, k)] = g[static_cast<size_t>(k)];
      rhs = multiply(rhs, f, c.bound);
    }
    for (const auto& r : ranks) {
      Rat lhs = Rat(moment_fiber_count(c.Q, c.alpha, r, c.q)) / Rat(gl_order(c.q, c.alpha, r)) *
                rpow(c.q, static_cast<int>(c.alpha * euler_form(c.Q, r, r)));
      CHECK(lhs == rhs[r]);
    }
  }
}

TEST_CASE("parallel sums are schedule independent") {
  BruteConfig one, four;
  four.jobs = 4;
  CHECK(moment_fiber_count(Quiver::gloop(2), 1, {2}, 2, {}, FiberMethod::DirectKernel, one) ==
        moment_fiber_count(Quiver::gloop(2), 1, {2}, 2, {}, FiberMethod::DirectKernel, four));
  CHECK(count_iso_classes(Quiver::jordan(), 1, {2}, 3, one) == count_iso_classes(Quiver::jordan(), 1, {2}, 3, four));
  LinearFamily row{1, 2, {{1, 0}, {0, 1}}};
  CHECK(ask_counts(row, 3, 2, one) == ask_counts(row, 3, 2, four));
}
