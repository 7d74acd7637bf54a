#include "starcomp/star/context.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "starcomp/errors.hpp"

namespace starcomp {

namespace {

constexpr std::int64_t kEntryLimit = std::int64_t{1} << 44;

IntMatrix kts_adjacency(const KtsTag& tag) {
  IntMatrix c(tag.t + tag.s, tag.t + tag.s);
  for (std::size_t i = 0; i < tag.t; ++i) {
    for (std::size_t j = 0; j < tag.s; ++j) {
      c(i, tag.t + j) = 1;
      c(tag.t + j, i) = 1;
    }
  }
  return c;
}

AlgebraicNumber from_size(std::size_t v) { return AlgebraicNumber(static_cast<long>(v)); }

std::optional<IntegralForm> make_integral(const FieldMatrix& n) {
  const std::size_t q = n.rows();
  BigInt den = 1;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), n(i, j).rational_part().get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), n(i, j).theta_part().get_den_mpz_t());
    }
  }
  IntegralForm form;
  form.denominator = den;
  form.p.resize(q * q);
  form.q.resize(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      Rational x = n(i, j).rational_part() * den;
      Rational y = n(i, j).theta_part() * den;
      BigInt xi = x.get_num();
      BigInt yi = y.get_num();
      if (abs(xi) > kEntryLimit || abs(yi) > kEntryLimit) return std::nullopt;
      form.p[i * q + j] = xi.get_si();
      form.q[i * q + j] = yi.get_si();
    }
  }
  return form;
}

// value * D as an integer pair, absent when it is not integral.
std::optional<std::pair<std::int64_t, std::int64_t>> scaled_target(const AlgebraicNumber& value, const BigInt& den) {
  Rational x = value.rational_part() * den;
  Rational y = value.theta_part() * den;
  x.canonicalize();
  y.canonicalize();
  if (x.get_den() != 1 || y.get_den() != 1) return std::nullopt;
  if (abs(x.get_num()) > kEntryLimit * 4096 || abs(y.get_num()) > kEntryLimit * 4096) return std::nullopt;
  return std::make_pair(BigInt(x.get_num()).get_si(), BigInt(y.get_num()).get_si());
}

std::vector<Mask> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  if (k > n) return out;
  if (k == 0) return {0};
  Mask m = (Mask{1} << k) - 1;
  const Mask limit = n == 64 ? 0 : Mask{1} << n;
  while (true) {
    out.push_back(m);
    Mask c = m & (~m + 1);
    Mask r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
    if (limit != 0 && m >= limit) break;
  }
  return out;
}

}  // namespace

const char* to_string(CompatLabel label) {
  switch (label) {
    case CompatLabel::Adjacent: return "adjacent";
    case CompatLabel::NonAdjacent: return "non-adjacent";
    case CompatLabel::Incompatible: return "incompatible";
  }
  return "?";
}

ScaledResolvent kts_resolvent(const KtsTag& tag, const AlgebraicNumber& mu) {
  const AlgebraicNumber shift = mu * mu - from_size(tag.t * tag.s);
  AlgebraicNumber mval = mu * shift;
  if (mval.is_zero()) {
    throw MuIsEigenvalue("mu = " + mu.to_string() + " is an eigenvalue of K_{" + std::to_string(tag.t) + "," +
                         std::to_string(tag.s) + "}");
  }
  IntMatrix c = kts_adjacency(tag);
  const std::size_t q = tag.t + tag.s;
  FieldMatrix n = FieldMatrix(c * c) + mu * FieldMatrix(c) + shift * FieldMatrix::identity(q);
  IntPolynomial annihilator({BigInt(0), BigInt(-static_cast<long>(tag.t * tag.s)), BigInt(0), BigInt(1)});
  return {std::move(n), std::move(mval), std::move(annihilator)};
}

StarContext StarContext::make(const Graph& h, const AlgebraicNumber& mu, std::optional<KtsTag> tag) {
  if (h.order() > kMaxComplementOrder) {
    throw TooLarge("star complements are limited to " + std::to_string(kMaxComplementOrder) + " vertices");
  }
  if (tag) {
    if (tag->t < 1 || tag->s < tag->t) throw BadTag("K_{t,s} tag needs s >= t >= 1");
    if (tag->t + tag->s != h.order() || !(Graph::from_adjacency(kts_adjacency(*tag)) == h)) {
      throw BadTag("complement is not K_{" + std::to_string(tag->t) + "," + std::to_string(tag->s) +
                   "} with parts 0..t-1 and t..t+s-1");
    }
  }
  StarContext ctx;
  ctx.h_ = h;
  ctx.mu_ = mu;
  ctx.tag_ = tag;
  IntMatrix c = h.adjacency();
  ScaledResolvent generic = scaled_resolvent(c, mu);
  ctx.n_ = generic.n;
  ctx.mval_ = generic.mval;
  if (tag) {
    const AlgebraicNumber fast_mval = mu * (mu * mu - from_size(tag->t * tag->s));
    if (!fast_mval.is_zero()) {
      ScaledResolvent fast = kts_resolvent(*tag, mu);
      const std::size_t q = h.order();
      FieldMatrix shifted = mu * FieldMatrix::identity(q) - FieldMatrix(c);
      if (!(fast.n * shifted == fast.mval * FieldMatrix::identity(q))) {
        throw std::logic_error("closed-form K_{t,s} resolvent fails N (mu I - C) = mval I");
      }
      // Both are multiples of the same inverse, so they agree after cross-scaling.
      if (!(generic.mval * fast.n == fast.mval * generic.n)) {
        throw std::logic_error("closed-form and generic resolvents disagree");
      }
      ctx.n_ = std::move(fast.n);
      ctx.mval_ = std::move(fast.mval);
      ctx.fast_path_ = true;
    }
  }
  const std::size_t q = h.order();
  ctx.ones_.assign(q, AlgebraicNumber(0L));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) ctx.ones_[i] += ctx.n_(i, j);
  }
  ctx.integral_ = make_integral(ctx.n_);
  return ctx;
}

std::optional<VertexType> StarContext::type_of(Mask bits) const {
  if (!tag_) return std::nullopt;
  const Mask vmask = (Mask{1} << tag_->t) - 1;
  return VertexType{static_cast<std::size_t>(std::popcount(bits & vmask)),
                    static_cast<std::size_t>(std::popcount(bits >> tag_->t))};
}

AlgebraicNumber StarContext::pairing(Mask x, Mask y) const {
  const std::size_t q = this->q();
  if (integral_) {
    std::int64_t sp = 0, sq = 0;
    for (Mask xi = x; xi != 0; xi &= xi - 1) {
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(xi));
      for (Mask yj = y; yj != 0; yj &= yj - 1) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(yj));
        sp += integral_->p[i * q + j];
        sq += integral_->q[i * q + j];
      }
    }
    Rational rx(BigInt(static_cast<long>(sp)), integral_->denominator);
    Rational ry(BigInt(static_cast<long>(sq)), integral_->denominator);
    return AlgebraicNumber(mu_.field(), rx, ry);
  }
  AlgebraicNumber total(0L);
  for (Mask xi = x; xi != 0; xi &= xi - 1) {
    for (Mask yj = y; yj != 0; yj &= yj - 1) {
      total += n_(static_cast<std::size_t>(std::countr_zero(xi)), static_cast<std::size_t>(std::countr_zero(yj)));
    }
  }
  return total;
}

AlgebraicNumber StarContext::pairing(const std::vector<int>& x, const std::vector<int>& y) const {
  if (x.size() != q() || y.size() != q()) throw std::invalid_argument("pairing vectors must have length q");
  auto to_mask = [](const std::vector<int>& v) {
    Mask m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0 && v[i] != 1) throw std::invalid_argument("pairing vectors must be 0/1");
      if (v[i] == 1) m |= Mask{1} << i;
    }
    return m;
  };
  return pairing(to_mask(x), to_mask(y));
}

CandidateVector StarContext::candidate(Mask bits) const {
  CandidateVector c;
  c.bits = bits;
  c.self_pair = pairing(bits, bits);
  c.ones_pair = AlgebraicNumber(0L);
  for (Mask b = bits; b != 0; b &= b - 1) c.ones_pair += ones_[static_cast<std::size_t>(std::countr_zero(b))];
  c.type = type_of(bits);
  return c;
}

bool StarContext::repeats_allowed() const { return mu_ == AlgebraicNumber(-1L) || mu_.is_zero(); }

std::vector<CandidateVector> enumerate_candidates_brute_force(const StarContext& ctx, bool non_main) {
  const std::size_t q = ctx.q();
  if (q > kBruteForceMaxOrder) {
    throw TooLarge("exhaustive candidate scan is limited to q <= " + std::to_string(kBruteForceMaxOrder));
  }
  const AlgebraicNumber self_target = ctx.mval() * ctx.mu();
  const AlgebraicNumber ones_target = -ctx.mval();
  const Mask first = ctx.mu().is_zero() ? 0 : 1;
  const Mask end = Mask{1} << q;
  std::vector<Mask> hits;

  std::optional<std::pair<std::int64_t, std::int64_t>> st, ot;
  if (ctx.integral()) {
    st = scaled_target(self_target, ctx.integral()->denominator);
    ot = scaled_target(ones_target, ctx.integral()->denominator);
  }
  if (ctx.integral() && st) {
    // Gray-code walk keeping N b, b^T N b and b^T N j up to date.
    const auto& form = *ctx.integral();
    std::vector<std::int64_t> onesp(q, 0), onesq(q, 0);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        onesp[i] += form.p[i * q + j];
        onesq[i] += form.q[i * q + j];
      }
    }
    std::vector<std::int64_t> nbp(q, 0), nbq(q, 0);
    std::int64_t selfp = 0, selfq = 0, op = 0, oq = 0;
    auto check = [&](Mask m) {
      if (m < first) return;
      if (selfp != st->first || selfq != st->second) return;
      if (non_main && (!ot || op != ot->first || oq != ot->second)) return;
      hits.push_back(m);
    };
    Mask gray = 0;
    check(gray);
    for (Mask i = 1; i < end; ++i) {
      const std::size_t k = static_cast<std::size_t>(std::countr_zero(i));
      const Mask bit = Mask{1} << k;
      if ((gray & bit) == 0) {
        selfp += 2 * nbp[k] + form.p[k * q + k];
        selfq += 2 * nbq[k] + form.q[k * q + k];
        for (std::size_t r = 0; r < q; ++r) {
          nbp[r] += form.p[r * q + k];
          nbq[r] += form.q[r * q + k];
        }
        op += onesp[k];
        oq += onesq[k];
      } else {
        for (std::size_t r = 0; r < q; ++r) {
          nbp[r] -= form.p[r * q + k];
          nbq[r] -= form.q[r * q + k];
        }
        selfp -= 2 * nbp[k] + form.p[k * q + k];
        selfq -= 2 * nbq[k] + form.q[k * q + k];
        op -= onesp[k];
        oq -= onesq[k];
      }
      gray ^= bit;
      check(gray);
    }
  } else if (!ctx.integral()) {
    for (Mask m = first; m < end; ++m) {
      if (ctx.pairing(m, m) != self_target) continue;
      if (non_main && ctx.candidate(m).ones_pair != ones_target) continue;
      hits.push_back(m);
    }
  }

  std::vector<CandidateVector> out;
  out.reserve(hits.size());
  for (Mask m : hits) out.push_back(ctx.candidate(m));
  std::stable_sort(out.begin(), out.end(), [](const CandidateVector& a, const CandidateVector& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.bits < b.bits;
  });
  return out;
}

std::vector<CandidateVector> enumerate_candidates(const StarContext& ctx, bool non_main) {
  if (!ctx.tag() || !ctx.fast_path()) return enumerate_candidates_brute_force(ctx, non_main);
  const KtsTag tag = *ctx.tag();
  const AlgebraicNumber& mu = ctx.mu();
  const AlgebraicNumber self_target = ctx.mval() * mu;
  const AlgebraicNumber ones_target = -ctx.mval();
  std::vector<CandidateVector> out;
  for (std::size_t a = 0; a <= tag.t; ++a) {
    for (std::size_t b = 0; b <= tag.s; ++b) {
      if (a == 0 && b == 0 && !mu.is_zero()) continue;
      const VertexType ty{a, b};
      if (kts_pairing(tag, mu, ty, ty, a + b) != self_target) continue;
      if (non_main) {
        AlgebraicNumber ones = mu * mu * from_size(a + b) + mu * from_size(a * tag.s + b * tag.t);
        if (ones != ones_target) continue;
      }
      std::vector<Mask> masks;
      for (Mask v : subsets_of_size(tag.t, a)) {
        for (Mask w : subsets_of_size(tag.s, b)) masks.push_back(v | (w << tag.t));
      }
      std::sort(masks.begin(), masks.end());
      for (Mask m : masks) {
        CandidateVector c = ctx.candidate(m);
        if (c.self_pair != self_target || (non_main && c.ones_pair != ones_target)) {
          throw std::logic_error("typed candidate fails the generic pairing check");
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

AlgebraicNumber kts_pairing(const KtsTag& tag, const AlgebraicNumber& mu, const VertexType& u, const VertexType& v,
                            std::size_t rho) {
  const std::size_t t = tag.t, s = tag.s;
  return (mu * mu - from_size(t * s)) * from_size(rho) + from_size(u.a * v.a * s + u.b * v.b * t) +
         mu * from_size(u.a * v.b + u.b * v.a);
}

CompatLabel classify_pair(const StarContext& ctx, const CandidateVector& u, const CandidateVector& v) {
  if (u.bits == v.bits && !ctx.repeats_allowed()) {
    throw DuplicateNeighbourhood("two star-set vertices cannot share an H-neighbourhood unless mu is -1 or 0");
  }
  AlgebraicNumber p = ctx.pairing(u.bits, v.bits);
  if (ctx.tag() && ctx.fast_path()) {
    auto tu = ctx.type_of(u.bits);
    auto tv = ctx.type_of(v.bits);
    const std::size_t rho = static_cast<std::size_t>(std::popcount(u.bits & v.bits));
    if (kts_pairing(*ctx.tag(), ctx.mu(), *tu, *tv, rho) != p) {
      throw std::logic_error("closed-form K_{t,s} pairing disagrees with x^T N y");
    }
  }
  if (p == -ctx.mval()) return CompatLabel::Adjacent;
  if (p.is_zero()) return CompatLabel::NonAdjacent;
  return CompatLabel::Incompatible;
}

}  // namespace starcomp
