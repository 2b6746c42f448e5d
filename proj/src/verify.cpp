#include "lbrep/verify.hpp"

#include "lbrep/braid.hpp"
#include "lbrep/completion.hpp"
#include "lbrep/embeddings.hpp"
#include "lbrep/homology.hpp"
#include "lbrep/pairing.hpp"
#include "lbrep/random.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lbrep {

namespace {

// A property returns an empty string on success and a counterexample otherwise.
using Property = std::function<std::string()>;

struct Suite {
  std::vector<PropertyResult> results;

  void check(const std::string& module, const std::string& name, const Property& p) {
    try {
      auto failure = p();
      results.push_back({module, name, failure.empty(), failure});
    } catch (const std::exception& e) {
      results.push_back({module, name, false, std::string("exception: ") + e.what()});
    }
  }
};

GroupRingElement inversion_polynomial(int n, const GroupRingElement& u) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  GroupRingElement sum(u.context());
  do {
    sum += u.pow(inversion_count(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

void ring_properties(Suite& s, Rng& rng) {
  auto ctx = standard_context(2);
  const auto d = GroupRingElement::variable(ctx, "d");
  s.check("ring", "quantum factorial = inversion generating function (n <= 7)", [&]() -> std::string {
    for (int n = 0; n <= 7; ++n) {
      if (quantum_factorial(n, d) != inversion_polynomial(n, d)) return "n = " + std::to_string(n);
    }
    return {};
  });
  s.check("ring", "alpha is an involution (1000 random elements)", [&]() -> std::string {
    for (int t = 0; t < 1000; ++t) {
      auto a = random_element(ctx, rng);
      if (a.involution().involution() != a) return to_text(a);
    }
    return {};
  });
  s.check("ring", "units come with inverses", [&]() -> std::string {
    for (int t = 0; t < 200; ++t) {
      auto a = t % 2 ? random_unit(ctx, rng) : random_element(ctx, rng, 2);
      if (!is_unit(a)) continue;
      auto b = a.unit_inverse();
      if (!b || !(a * *b).is_one()) return to_text(a);
    }
    return {};
  });
  s.check("ring", "specialization commutes with arithmetic", [&]() -> std::string {
    auto q = CoefficientRing::rationals();
    auto target = make_context(q, {});
    for (int t = 0; t < 200; ++t) {
      auto a = random_element(ctx, rng);
      auto b = random_element(ctx, rng);
      std::map<std::string, Scalar> v{{"x", Rational(2 + t % 3, 3)}, {"d", Rational(-3, 1 + t % 4)}};
      for (auto op : {RingOp::add, RingOp::sub, RingOp::mul}) {
        auto lhs = specialize(ring_arithmetic(a, b, op), v, target);
        auto rhs = ring_arithmetic(specialize(a, v, target), specialize(b, v, target), op);
        if (lhs != rhs) return to_text(a) + " , " + to_text(b);
      }
    }
    return {};
  });
}

void combinatorics_properties(Suite& s) {
  s.check("combinatorics", "|E_{l,m}| = C(m+l-1, m) (l, m <= 8)", []() -> std::string {
    for (int l = 1; l <= 8; ++l) {
      for (int m = 0; m <= 8; ++m) {
        auto all = enumerate_compositions(l, m);
        std::set<std::vector<int>> distinct;
        for (const auto& e : all) {
          if (e.total() != m || static_cast<int>(e.length()) != l) return "bad element " + e.str();
          distinct.insert(e.parts());
        }
        if (distinct.size() != all.size() || all.size() != binomial(m + l - 1, m)) {
          return "l = " + std::to_string(l) + ", m = " + std::to_string(m);
        }
      }
    }
    return {};
  });
  s.check("combinatorics", "rank and unrank are inverse and follow enumeration order", []() -> std::string {
    for (int l = 1; l <= 5; ++l) {
      for (int m = 0; m <= 5; ++m) {
        auto all = enumerate_compositions(l, m);
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (rank(all[i]) != i || unrank(i, l, m) != all[i]) return all[i].str();
        }
      }
    }
    return {};
  });
}

void surface_properties(Suite& s) {
  s.check("surface-basis", "four bases have size dimension(triad)", []() -> std::string {
    for (int g = 0; g <= 2; ++g) {
      for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= 2; ++k) {
          for (int m = 1; m <= 5; ++m) {
            SurfaceTriad t{g, n, k, m};
            if (t.arc_count() < 1 || t.arc_count() > 6) continue;
            const auto dim = dimension(t);
            for (auto side : {Side::in, Side::out}) {
              for (auto f : {Flavour::relative, Flavour::locally_finite}) {
                if (basis(t, side, f).size() != dim) return t.str();
              }
            }
          }
        }
      }
    }
    return {};
  });
  s.check("surface-basis", "Burau and LKB dimensions (n <= 12)", []() -> std::string {
    for (int n = 2; n <= 12; ++n) {
      if (dimension({0, n, 0, 1}) != static_cast<std::uint64_t>(n - 1)) return "m = 1, n = " + std::to_string(n);
      if (dimension({0, n, 0, 2}) != static_cast<std::uint64_t>(n * (n - 1) / 2)) return "m = 2, n = " + std::to_string(n);
    }
    return {};
  });
}

void pairing_properties(Suite& s, Rng& rng) {
  s.check("pairing", "geometric pairing = delta * prod [e_i]_u! (l, m <= 4)", []() -> std::string {
    for (int l = 1; l <= 4; ++l) {
      for (int m = 1; m <= 4; ++m) {
        SurfaceTriad t{0, l + 1, 0, m};
        auto sys = LocalSystemSpec::standard(m);
        const auto& u = sys.homogeneity_unit();
        auto lhs = basis(t, Side::out, Flavour::lf_image);
        auto rhs = basis(t, Side::out, Flavour::relative);
        for (const auto& a : lhs) {
          for (const auto& b : rhs) {
            auto expected = GroupRingElement(sys.context());
            if (a.composition == b.composition) {
              expected = GroupRingElement::integer(sys.context(), 1);
              for (int p : a.composition.parts()) expected *= quantum_factorial(p, u);
            }
            if (geometric_pairing(t, Side::out, a, b, sys) != expected) return a.label() + " x " + b.label();
          }
        }
      }
    }
    return {};
  });
  s.check("pairing", "delta pairing is invariant under simultaneous basis permutation", [&]() -> std::string {
    SurfaceTriad t{0, 4, 0, 2};
    auto p = delta_pairing(t, Side::in, LocalSystemSpec::standard(2)).entries;
    std::vector<std::size_t> perm(p.rows());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      RingMatrix q(p.context(), p.rows(), p.cols());
      for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) q(i, j) = p(perm[i], perm[j]);
      }
      if (!q.is_identity()) return "trial " + std::to_string(trial);
    }
    return {};
  });
  s.check("pairing", "sesquilinearity (200 random triples)", [&]() -> std::string {
    auto ctx = standard_context(2);
    SurfaceTriad t{0, 3, 0, 2};
    auto p = delta_pairing(t, Side::in, LocalSystemSpec::standard(2)).entries;
    for (int trial = 0; trial < 200; ++trial) {
      auto r = random_element(ctx, rng, 3, 2);
      std::vector<GroupRingElement> v, w;
      for (std::size_t i = 0; i < p.rows(); ++i) {
        v.push_back(random_element(ctx, rng, 2, 2));
        w.push_back(random_element(ctx, rng, 2, 2));
      }
      auto rv = v;
      auto rw = w;
      for (auto& e : rv) e = r * e;
      for (auto& e : rw) e = r * e;
      const auto base = pair(p, v, w);
      if (pair(p, rv, w) != r.involution() * base || pair(p, v, rw) != r * base) return "r = " + to_text(r);
    }
    return {};
  });
  s.check("pairing", "local intersection sum = quantum factorial (r <= 7)", []() -> std::string {
    auto ctx = standard_context(2);
    const auto d = GroupRingElement::variable(ctx, "d");
    for (int r = 0; r <= 7; ++r) {
      if (local_intersection_sum(r, d) != quantum_factorial(r, d)) return "r = " + std::to_string(r);
    }
    return {};
  });
}

void embedding_properties(Suite& s, Rng& rng) {
  s.check("embeddings", "m = 1 embedding is the identity (l <= 6)", []() -> std::string {
    for (int l = 1; l <= 6; ++l) {
      SurfaceTriad t{0, l + 1, 0, 1};
      for (auto dir : {Direction::in, Direction::out}) {
        if (!embedding_matrix(t, dir, LocalSystemSpec::standard(1)).matrix().is_identity()) return t.str();
      }
    }
    return {};
  });
  s.check("embeddings", "diagonal = product of local intersection sums", []() -> std::string {
    for (int l = 1; l <= 3; ++l) {
      for (int m = 1; m <= 4; ++m) {
        SurfaceTriad t{0, l + 1, 0, m};
        auto sys = LocalSystemSpec::standard(m);
        auto e = embedding_matrix(t, Direction::in, sys);
        for (std::size_t i = 0; i < e.diagonal.size(); ++i) {
          auto expected = GroupRingElement::integer(sys.context(), 1);
          for (int p : e.source[i].composition.parts()) expected *= local_intersection_sum(p, sys.homogeneity_unit());
          if (e.diagonal[i] != expected) return e.source[i].label();
        }
      }
    }
    return {};
  });
  s.check("embeddings", "certify_injective agrees with kernels of random vectors", [&]() -> std::string {
    auto q = CoefficientRing::rationals();
    auto ctx = make_context(q, {"x"});
    SurfaceTriad t{0, 3, 0, 2};
    for (long long uval : {-1LL, 1LL}) {
      auto sys = LocalSystemSpec::with_unit(ctx, GroupRingElement::integer(ctx, uval), 2);
      auto e = embedding_matrix(t, Direction::in, sys);
      const bool injective = certify_injective(e).injective;
      // A vector supported on a vanishing entry lies in the kernel.
      bool found_kernel = false;
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<GroupRingElement> v;
        for (std::size_t i = 0; i < e.diagonal.size(); ++i) v.push_back(random_element(ctx, rng, 2, 2));
        bool nonzero = std::any_of(v.begin(), v.end(), [](const auto& a) { return !a.is_zero(); });
        auto image = e.matrix().apply(v);
        bool zero_image = std::all_of(image.begin(), image.end(), [](const auto& a) { return a.is_zero(); });
        if (nonzero && zero_image) found_kernel = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (e.diagonal[i].is_zero()) {
            std::vector<GroupRingElement> basis_vec(v.size(), GroupRingElement(ctx));
            basis_vec[i] = GroupRingElement::integer(ctx, 1);
            auto img = e.matrix().apply(basis_vec);
            if (std::all_of(img.begin(), img.end(), [](const auto& a) { return a.is_zero(); })) found_kernel = true;
          }
        }
      }
      if (injective == found_kernel) return "u = " + std::to_string(uval);
    }
    return {};
  });
}

void braid_properties(Suite& s, Rng& rng) {
  s.check("braid-rep", "braid relations and dimensions (m = 1, 2; n <= 6)", []() -> std::string {
    for (int m = 1; m <= 2; ++m) {
      for (int n = 2; n <= 6; ++n) {
        std::vector<RingMatrix> g;
        for (int i = 1; i < n; ++i) g.push_back(generator_matrix(n, i, m));
        const auto expected = m == 1 ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n * (n - 1) / 2);
        if (g.front().rows() != expected) return "dimension n = " + std::to_string(n);
        for (int i = 0; i + 1 < n - 1; ++i) {
          if (g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]) {
            return "braid relation m = " + std::to_string(m) + ", n = " + std::to_string(n) + ", i = " + std::to_string(i + 1);
          }
        }
        for (int i = 0; i < n - 1; ++i) {
          for (int j = i + 2; j < n - 1; ++j) {
            if (g[i] * g[j] != g[j] * g[i]) return "far commutation n = " + std::to_string(n);
          }
        }
      }
    }
    return {};
  });
  s.check("braid-rep", "pairing invariance of the dual representation", [&]() -> std::string {
    for (int m = 1; m <= 2; ++m) {
      for (int n = 2; n <= 4; ++n) {
        auto rho = Representation::lawrence_bigelow(n, m);
        auto dual = Representation::dual(rho);
        for (int t = 0; t < 10; ++t) {
          auto w = random_word(n, 6, rng);
          if (!(rho.evaluate(w).involution().transpose() * dual.evaluate(w)).is_identity()) return w.str();
        }
      }
    }
    return {};
  });
  s.check("braid-rep", "relations survive generic complex specialization", []() -> std::string {
    auto c = CoefficientRing::complex_approx();
    auto target = make_context(c, {});
    std::map<std::string, Scalar> v{{"x", Complex(0.7, 0.4)}, {"d", Complex(-1.3, 0.2)}};
    for (int n = 3; n <= 5; ++n) {
      auto rho = Representation::lawrence_bigelow(n, 2).specialize(v, target);
      for (int i = 1; i + 1 < n; ++i) {
        auto lhs = rho.evaluate(BraidWord{n, {i, i + 1, i}});
        auto rhs = rho.evaluate(BraidWord{n, {i + 1, i, i + 1}});
        if (lhs != rhs) return "n = " + std::to_string(n) + ", i = " + std::to_string(i);
      }
    }
    return {};
  });
  s.check("braid-rep", "diagonal conjugation stays integral (n <= 5)", []() -> std::string {
    for (int n = 2; n <= 5; ++n) {
      auto cert = diagonal_conjugation_integrality(n, 2);
      if (!cert.integral) return "n = " + std::to_string(n) + ": " + cert.failures.front().entry;
    }
    return {};
  });
}

void homology_properties(Suite& s, Rng& rng) {
  s.check("twisted-homology", "H^1 = 0 iff 1 - m is a unit", [&]() -> std::string {
    for (auto k : {CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::modular(5)}) {
      auto ctx = make_context(k, {"x", "d"});
      for (int t = 0; t < 100; ++t) {
        auto m = t % 4 == 0 ? GroupRingElement::constant(ctx, k.from_integer(t % 8 == 0 ? 2 : -1)) : random_unit(ctx, rng, 1);
        if (!is_unit(m)) continue;
        auto c = circle_cohomology(m);
        if (c.h1_zero != is_unit(GroupRingElement::integer(ctx, 1) - m)) return k.name() + ": " + to_text(m);
      }
    }
    return {};
  });
  s.check("twisted-homology", "Shapiro over Z, Q, F_2, F_3, F_5", []() -> std::string {
    for (auto k : {CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::modular(2),
                   CoefficientRing::modular(3), CoefficientRing::modular(5)}) {
      for (unsigned order : {0u, 2u, 3u}) {
        auto v = shapiro_circle_check(k, order);
        if (!v.match) return v.description;
      }
    }
    return {};
  });
  s.check("twisted-homology", "homology ranks invariant under chain isomorphism", [&]() -> std::string {
    auto ctx = make_context(CoefficientRing::integers(), {"x"});
    const auto x = GroupRingElement::variable(ctx, 0);
    const auto one = GroupRingElement::integer(ctx, 1);
    // C_1 = R^2 -> C_0 = R^2 with d = diag(1 - x, 0).
    RingMatrix dmat(ctx, 2, 2);
    dmat(0, 0) = one - x;
    FiniteChainComplex base(ctx, {2, 2}, {dmat}, Grading::homological);
    for (int t = 0; t < 50; ++t) {
      // Elementary invertible matrices over R.
      auto a = RingMatrix::identity(ctx, 2);
      auto b = RingMatrix::identity(ctx, 2);
      a(0, 1) = random_element(ctx, rng, 2, 1);
      b(1, 0) = random_element(ctx, rng, 2, 1);
      auto conj = a * dmat * *b.inverse();
      FiniteChainComplex moved(ctx, {2, 2}, {conj}, Grading::homological);
      for (long long xv : {1LL, 2LL, -1LL}) {
        SpecializationPoint p({{"x", Rational(xv)}}, CoefficientRing::rationals());
        if (homology_ranks_at(base, p) != homology_ranks_at(moved, p)) return "x = " + std::to_string(xv);
      }
    }
    return {};
  });
}

void completion_properties(Suite& s, Rng& rng) {
  auto ctx = make_context(CoefficientRing::integers(), {"y", "z"});
  s.check("completion", "include_group_ring is a module map (200 random pairs)", [&]() -> std::string {
    for (int t = 0; t < 200; ++t) {
      auto r = random_element(ctx, rng);
      auto a = random_element(ctx, rng);
      if (include_group_ring(r * a) != module_action(r, include_group_ring(a))) return to_text(r) + " , " + to_text(a);
    }
    return {};
  });
  s.check("completion", "inclusion round trip", [&]() -> std::string {
    for (int t = 0; t < 200; ++t) {
      auto a = random_element(ctx, rng);
      auto back = include_group_ring(a).to_group_ring();
      if (!back || *back != a) return to_text(a);
    }
    return {};
  });
  s.check("completion", "helix matches windowed expansion (N = 20)", [&]() -> std::string {
    SurfaceTriad t{0, 3, 0, 1};
    const ExponentVector y{1, 0};
    const ExponentVector z{0, 1};
    auto h = helix_class(t, Composition({0, 1}), y, z, ctx);
    const auto& coord = h.coordinates[rank(Composition({0, 1}))];
    if (coord.is_in_group_ring()) return "helix lies in k[G]";
    const int n = 20;
    const auto& k = ctx->coefficients();
    for (int a = -(n - 1); a <= n - 1; ++a) {
      for (int b = -(n - 1); b <= n - 1; ++b) {
        // (1 - y)(yz)^i contributes +1 at (i, i) and -1 at (i + 1, i).
        long long expected = 0;
        for (int i = -n; i <= n; ++i) {
          if (a == i && b == i) expected += 1;
          if (a == i + 1 && b == i) expected -= 1;
        }
        if (!k.equal(coord.coefficient_at(ExponentVector{a, b}), k.from_integer(expected))) {
          return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    }
    return {};
  });
  s.check("completion", "left-circle helix is zero", [&]() -> std::string {
    SurfaceTriad t{0, 3, 0, 1};
    auto h = helix_around(t, Composition({1, 0}), {ExponentVector{1, 0}}, ctx);
    if (!h.is_zero() || !h.is_in_group_ring()) return "non-zero";
    return {};
  });
}

}  // namespace

std::vector<PropertyResult> run_invariant_suite(std::uint64_t seed) {
  Suite s;
  Rng rng(seed);
  ring_properties(s, rng);
  combinatorics_properties(s);
  surface_properties(s);
  pairing_properties(s, rng);
  embedding_properties(s, rng);
  braid_properties(s, rng);
  homology_properties(s, rng);
  completion_properties(s, rng);
  return s.results;
}

}  // namespace lbrep
