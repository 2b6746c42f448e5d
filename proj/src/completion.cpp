#include "lbrep/completion.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace lbrep {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

std::size_t first_nonzero(const ExponentVector& v) {
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.rank();
}

// Index i with g = base + i*step, if any.
std::optional<std::int64_t> ray_index(const ExponentVector& g, const ExponentVector& base, const ExponentVector& step) {
  const auto diff = g - base;
  const auto j = first_nonzero(step);
  if (diff[j] % step[j] != 0) return std::nullopt;
  const auto i = diff[j] / step[j];
  if (diff != step * i) return std::nullopt;
  return i;
}

// A ray seen from its line: points rep + s*h with h primitive and
// lex-positive. The ray visits s = t0 + sigma*c*i.
struct LineRay {
  std::int64_t t0;
  std::int64_t c;
  int sigma;
  const std::vector<Scalar>* pattern;
  bool bi;

  std::int64_t period() const { return c * static_cast<std::int64_t>(pattern->size()); }
  bool reaches_plus() const { return bi || sigma > 0; }
  bool reaches_minus() const { return bi || sigma < 0; }

  // Periodic extension of the pattern along the whole line; nullopt off the lattice of visited points.
  std::optional<Scalar> periodic(std::int64_t s) const {
    const auto diff = s - t0;
    if (diff % c != 0) return std::nullopt;
    const auto i = sigma * (diff / c);
    return (*pattern)[static_cast<std::size_t>(floor_mod(i, static_cast<std::int64_t>(pattern->size())))];
  }
  std::optional<Scalar> actual(std::int64_t s) const {
    if (!bi && sigma * (s - t0) < 0) return std::nullopt;
    return periodic(s);
  }
};

struct LineKey {
  std::vector<std::int64_t> step;
  std::vector<std::int64_t> rep;
  auto operator<=>(const LineKey&) const = default;
};

std::vector<Scalar> minimal_period(std::vector<Scalar> pattern, const CoefficientRing& k) {
  const auto n = pattern.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = k.equal(pattern[i], pattern[i % d]);
    if (ok) {
      pattern.resize(d);
      break;
    }
  }
  return pattern;
}

bool all_zero(const std::vector<Scalar>& v, const CoefficientRing& k) {
  for (const auto& s : v) {
    if (!k.is_zero(s)) return false;
  }
  return true;
}

}  // namespace

CompletedElement::CompletedElement(Context context) : context_(context), finite_(std::move(context)) {}

CompletedElement CompletedElement::ray(Context context, ExponentVector base, ExponentVector step,
                                       std::vector<Scalar> pattern, RayDirection direction) {
  if (base.rank() != context->rank() || step.rank() != context->rank()) {
    throw std::invalid_argument("ray: exponent vectors must have rank " + std::to_string(context->rank()));
  }
  if (step.is_zero()) throw std::invalid_argument("ray: step must be non-zero");
  if (pattern.empty()) throw std::invalid_argument("ray: pattern must be non-empty");
  CompletedElement c(context);
  c.rays_.push_back(Ray{std::move(base), std::move(step), std::move(pattern), direction});
  return c;
}

Scalar CompletedElement::coefficient_at(const ExponentVector& g) const {
  const auto& k = context_->coefficients();
  Scalar total = finite_.coefficient(g);
  for (const auto& r : rays_) {
    auto i = ray_index(g, r.base, r.step);
    if (!i || (r.direction == RayDirection::fwd && *i < 0)) continue;
    const auto n = static_cast<std::int64_t>(r.pattern.size());
    total = k.add(total, r.pattern[static_cast<std::size_t>(floor_mod(*i, n))]);
  }
  return total;
}

CompletedElement CompletedElement::operator+(const CompletedElement& other) const {
  if (!same_context(context_, other.context_)) throw std::invalid_argument("completed elements over different rings");
  auto rays = rays_;
  rays.insert(rays.end(), other.rays_.begin(), other.rays_.end());
  return CompletedElement(context_, finite_ + other.finite_, std::move(rays));
}

CompletedElement CompletedElement::operator-() const { return scaled(context_->coefficients().from_integer(-1)); }

CompletedElement CompletedElement::operator-(const CompletedElement& other) const { return *this + (-other); }

CompletedElement CompletedElement::scaled(const Scalar& c) const {
  const auto& k = context_->coefficients();
  auto rays = rays_;
  for (auto& r : rays) {
    for (auto& p : r.pattern) p = k.mul(p, c);
  }
  return CompletedElement(context_, finite_.scaled(c), std::move(rays));
}

CompletedElement CompletedElement::shifted(const ExponentVector& v) const {
  auto rays = rays_;
  for (auto& r : rays) r.base = r.base + v;
  return CompletedElement(context_, finite_.shifted(v), std::move(rays));
}

CompletedElement CompletedElement::normalized() const {
  const auto& k = context_->coefficients();
  std::map<LineKey, std::vector<LineRay>> lines;
  for (const auto& r : rays_) {
    std::int64_t c = 0;
    for (auto v : r.step.entries()) c = std::gcd(c, v);
    auto h = r.step;
    for (std::size_t i = 0; i < h.rank(); ++i) h[i] /= c;
    const auto j = first_nonzero(h);
    int sigma = 1;
    if (h[j] < 0) {
      h = -h;
      sigma = -1;
    }
    const auto t0 = floor_div(r.base[j], h[j]);
    const auto rep = r.base - h * t0;
    lines[LineKey{h.entries(), rep.entries()}].push_back(
        LineRay{t0, c, sigma, &r.pattern, r.direction == RayDirection::bi});
  }

  CompletedElement out(context_);
  out.finite_ = finite_;
  for (const auto& [key, members] : lines) {
    const ExponentVector h(key.step);
    const ExponentVector rep(key.rep);
    std::int64_t period = 1;
    bool any_fwd = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (const auto& m : members) {
      period = std::lcm(period, m.period());
      if (m.bi) continue;
      lo = any_fwd ? std::min(lo, m.t0) : m.t0;
      hi = any_fwd ? std::max(hi, m.t0) : m.t0;
      any_fwd = true;
    }
    auto sum_at = [&](std::int64_t s, int mode) {
      Scalar v = k.zero();
      for (const auto& m : members) {
        std::optional<Scalar> x;
        if (mode == 0) x = m.actual(s);
        if (mode > 0 && m.reaches_plus()) x = m.periodic(s);
        if (mode < 0 && m.reaches_minus()) x = m.periodic(s);
        if (x) v = k.add(v, *x);
      }
      return v;
    };
    std::vector<Scalar> minus(static_cast<std::size_t>(period));
    std::vector<Scalar> delta(static_cast<std::size_t>(period));
    for (std::int64_t r = 0; r < period; ++r) {
      minus[r] = sum_at(r, -1);
      delta[r] = k.sub(sum_at(r, 1), minus[r]);
    }
    if (!all_zero(minus, k)) {
      out.rays_.push_back(Ray{rep, h, minimal_period(minus, k), RayDirection::bi});
    }
    if (!all_zero(delta, k)) {
      std::vector<Scalar> shifted(delta.size());
      for (std::int64_t r = 0; r < period; ++r) shifted[r] = delta[floor_mod(lo + r, period)];
      out.rays_.push_back(Ray{rep + h * lo, h, minimal_period(shifted, k), RayDirection::fwd});
    }
    // Between the first and last forward start the actual values may differ
    // from the two tails; the difference goes into the finite part.
    if (any_fwd) {
      for (std::int64_t s = lo; s <= hi; ++s) {
        auto corr = k.sub(k.sub(sum_at(s, 0), minus[floor_mod(s, period)]), delta[floor_mod(s, period)]);
        if (!k.is_zero(corr)) out.finite_ += GroupRingElement::monomial(context_, rep + h * s, corr);
      }
    }
  }
  return out;
}

bool CompletedElement::is_in_group_ring() const { return normalized().rays_.empty(); }

std::optional<GroupRingElement> CompletedElement::to_group_ring() const {
  auto n = normalized();
  if (!n.rays_.empty()) return std::nullopt;
  return n.finite_;
}

bool CompletedElement::is_zero() const {
  auto n = normalized();
  return n.rays_.empty() && n.finite_.is_zero();
}

CompletedElement include_group_ring(const GroupRingElement& a) { return CompletedElement(a.context(), a, {}); }

CompletedElement module_action(const GroupRingElement& r, const CompletedElement& c) {
  if (!same_context(r.context(), c.context())) throw std::invalid_argument("module_action: ring mismatch");
  CompletedElement out(c.context());
  for (const auto& [h, coeff] : r.terms()) out = out + c.shifted(h).scaled(coeff);
  return out.normalized();
}

bool is_in_group_ring(const CompletedElement& c) { return c.is_in_group_ring(); }

bool CompletedVector::is_zero() const {
  for (const auto& c : coordinates) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CompletedVector::is_in_group_ring() const {
  for (const auto& c : coordinates) {
    if (!c.is_in_group_ring()) return false;
  }
  return true;
}

namespace {

CompletedVector zero_vector(const SurfaceTriad& triad, const Composition& e, const Context& context) {
  triad.validate();
  if (e.length() != static_cast<std::size_t>(triad.arc_count()) || e.total() != triad.points) {
    throw std::invalid_argument("helix: composition " + e.str() + " is not in E_{" + std::to_string(triad.arc_count()) +
                                "," + std::to_string(triad.points) + "}");
  }
  CompletedVector v{basis(triad, Side::in, Flavour::locally_finite), {}};
  v.coordinates.assign(v.basis.size(), CompletedElement(context));
  return v;
}

}  // namespace

CompletedVector helix_class(const SurfaceTriad& triad, const Composition& e, const ExponentVector& y,
                            const ExponentVector& z, const Context& context) {
  auto v = zero_vector(triad, e, context);
  if (y.rank() != context->rank() || z.rank() != context->rank()) {
    throw std::invalid_argument("helix: monodromies must have rank " + std::to_string(context->rank()));
  }
  if (y.is_zero()) throw std::invalid_argument("helix: y is trivial, so the circle lifts to a loop");
  if (z.is_zero()) throw std::invalid_argument("helix: z is trivial, so the circle lifts to a loop");
  if ((y + z).is_zero()) throw std::invalid_argument("helix: yz is trivial, so the torus lifts to a compact torus");
  const auto& k = context->coefficients();
  const auto step = y + z;
  auto coord = CompletedElement::ray(context, ExponentVector(context->rank()), step, {k.one()}, RayDirection::bi) +
               CompletedElement::ray(context, y, step, {k.from_integer(-1)}, RayDirection::bi);
  v.coordinates[rank(e)] = coord.normalized();
  return v;
}

CompletedVector helix_around(const SurfaceTriad& triad, const Composition& e,
                             const std::vector<ExponentVector>& encircled, const Context& context) {
  if (triad.points != 1) throw std::invalid_argument("helix_around: only m = 1 circles are supported");
  if (encircled.size() == 1) return zero_vector(triad, e, context);
  if (encircled.size() == 2) return helix_class(triad, e, encircled[0], encircled[1], context);
  throw std::invalid_argument("helix_around: expected one or two encircled boundary components, got " +
                              std::to_string(encircled.size()));
}

}  // namespace lbrep
