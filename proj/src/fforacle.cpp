#include "cyclic/fforacle.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

using Element = FiniteField::Element;

enum class Family { Kummer, Hyper, ASPower, ASRational, Homma };

[[noreturn]] void precondition(const std::string& why) {
  throw Error(ErrorKind::PreconditionViolated, why);
}

// A model with its parameters resolved to elements of one concrete field.
struct BoundModel {
  const FiniteField& f;
  Family family;
  Int n = 0, r = 0, s = 0;  // Kummer
  Int g = 0;                // hyperelliptic genus
  Int p = 0, m = 0;         // Artin–Schreier data
  Element lambda = 0, a = 0, b = 0, c = 0;

  // Each plane model reads Y(y) = X(x).
  Element lhs(Element y) const {
    switch (family) {
      case Family::Kummer: return f.pow(y, static_cast<std::uint64_t>(n));
      case Family::Hyper: return f.mul(y, y);
      case Family::ASPower:
      case Family::Homma:
        return f.sub(f.pow(y, static_cast<std::uint64_t>(p)), y);
      case Family::ASRational:
        return f.add(f.mul(b, f.pow(y, static_cast<std::uint64_t>(p))),
                     f.mul(c, y));
    }
    return 0;
  }

  Element rhs(Element x) const {
    switch (family) {
      case Family::Kummer:
        return f.mul(f.pow(x, static_cast<std::uint64_t>(r)),
                     f.pow(f.sub(1, x), static_cast<std::uint64_t>(s)));
      case Family::Hyper: {
        Element xg = f.pow(x, static_cast<std::uint64_t>(g + 1));
        return f.mul(f.sub(xg, 1), f.sub(xg, lambda));
      }
      case Family::ASPower:
        return f.mul(a, f.sub(f.pow(x, static_cast<std::uint64_t>(m)), b));
      case Family::ASRational: return f.add(f.mul(a, x), f.inv(x));
      case Family::Homma: return f.mul(x, x);
    }
    return 0;
  }

  // x-values whose affine points the counters treat as ordinary points.
  bool counted_x(Element x) const {
    if (family == Family::Kummer) return x != 0 && x != 1;
    if (family == Family::ASRational) return x != 0;
    return true;
  }

  bool on_curve(Element x, Element y) const {
    if (family == Family::ASRational && x == 0) return false;
    return lhs(y) == rhs(x);
  }

  // Places over x = 0, 1, infinity that are not counted as affine points.
  Int extra_places() const {
    switch (family) {
      case Family::Kummer: {
        Int at_infinity = gcd(n, r + s);
        // Places over infinity are the roots of z^d = (-1)^s.
        Element sign = s % 2 == 0 ? Element{1} : f.neg(1);
        bool rational =
            f.pow(sign, static_cast<std::uint64_t>((f.order() - 1) / at_infinity)) == 1;
        return gcd(n, r) + gcd(n, s) + (rational ? at_infinity : 0);
      }
      case Family::Hyper: return 2;
      case Family::ASPower: return 1;
      case Family::ASRational: return 2;
      case Family::Homma: return 1;
    }
    return 0;
  }
};

std::unique_ptr<BoundModel> bind(const CurveModel& model,
                                 const FiniteField& field,
                                 const FiniteField& param_field) {
  std::unique_ptr<FieldEmbedding> embed;
  if (&param_field != &field)
    embed = std::make_unique<FieldEmbedding>(param_field, field);
  auto resolve = [&](const Param& param, const char* what) -> Element {
    if (param.is_symbolic())
      precondition(std::string("parameter ") + what +
                   " is symbolic; supply a field element");
    Element e = param_field.from_poly(param.coeffs());
    return embed ? (*embed)(e) : e;
  };
  if (auto need = required_characteristic(model);
      need && *need != field.characteristic())
    precondition(std::string(family_name(model)) + " curves live in characteristic " +
                 std::to_string(*need) + ", field has characteristic " +
                 std::to_string(field.characteristic()));

  const Int q = field.order();
  auto bound = std::make_unique<BoundModel>(BoundModel{field, Family::Kummer});
  if (const auto* k = std::get_if<KummerModel>(&model)) {
    bound->family = Family::Kummer;
    bound->n = k->pair().n();
    bound->r = k->pair().r();
    bound->s = k->pair().s();
    if ((q - 1) % bound->n != 0)
      precondition("kummer: N = " + std::to_string(bound->n) +
                   " does not divide q - 1 = " + std::to_string(q - 1));
  } else if (const auto* h = std::get_if<HyperellipticModel>(&model)) {
    bound->family = Family::Hyper;
    bound->g = h->genus();
    if ((bound->g + 1) % field.characteristic() == 0)
      precondition("hyper: characteristic divides g + 1");
    bound->lambda = resolve(h->lambda(), "lambda");
    if (bound->lambda == 0 || bound->lambda == 1)
      precondition("hyper: lambda reduces to 0 or 1 in F_" + std::to_string(q));
  } else if (const auto* ap = std::get_if<ASPowerModel>(&model)) {
    bound->family = Family::ASPower;
    bound->p = ap->p();
    bound->m = ap->m();
    if ((q - 1) % bound->m != 0)
      precondition("aspower: m = " + std::to_string(bound->m) +
                   " does not divide q - 1 = " + std::to_string(q - 1));
    bound->a = resolve(ap->a(), "a");
    bound->b = resolve(ap->b(), "b");
    if (bound->a == 0) precondition("aspower: a reduces to 0");
  } else if (const auto* ar = std::get_if<ASRationalModel>(&model)) {
    bound->family = Family::ASRational;
    bound->p = ar->p();
    bound->a = resolve(ar->a(), "a");
    bound->b = resolve(ar->b(), "b");
    bound->c = resolve(ar->c(), "c");
    if (bound->a == 0 || bound->b == 0 || bound->c == 0)
      precondition("asrational: a, b and c must be nonzero in the field");
  } else if (const auto* hm = std::get_if<HommaModel>(&model)) {
    bound->family = Family::Homma;
    bound->p = hm->p();
  }
  return bound;
}

void check_hasse_weil(const CurveModel& model, const FiniteField& field,
                      Int count) {
  if (!within_hasse_weil(count, field.order(), genus(model)))
    throw Error(ErrorKind::Inconsistent,
                "count " + std::to_string(count) + " over F_" +
                    std::to_string(field.order()) +
                    " violates the Hasse-Weil bound for genus " +
                    std::to_string(genus(model)));
}

// Number of y with b y^p + c y = v is p * [Tr(v w) = 0] when the kernel of
// that F_p-linear map is nontrivial (w depends on b, c), and 1 otherwise.
struct RationalASSolver {
  bool kernel_nontrivial = false;
  Element w = 0;

  explicit RationalASSolver(const BoundModel& bm) {
    const auto& f = bm.f;
    const Int q = f.order();
    Element kappa = f.mul(f.neg(bm.c), f.inv(bm.b));
    if (f.pow(kappa, static_cast<std::uint64_t>((q - 1) / (bm.p - 1))) != 1)
      return;
    for (Int cand = 1; cand < q; ++cand) {
      auto mu = static_cast<Element>(cand);
      if (f.pow(mu, static_cast<std::uint64_t>(bm.p - 1)) == kappa) {
        kernel_nontrivial = true;
        w = f.inv(f.neg(f.mul(bm.c, mu)));
        return;
      }
    }
    throw Error(ErrorKind::Inconsistent, "(p-1)-th root not found");
  }
};

}  // namespace

__extension__ using Wide = __int128;

bool within_hasse_weil(Int count, Int q_power, Genus g) {
  Wide diff = static_cast<Wide>(count) - q_power - 1;
  Wide bound = static_cast<Wide>(4) * g * g * q_power;
  return diff * diff <= bound;
}

Int count_places(const CurveModel& model, const FiniteField& field,
                 const FiniteField& param_field) {
  auto bm = bind(model, field, param_field);
  const auto& f = field;
  const Int q = f.order();
  Int affine = 0;
  switch (bm->family) {
    case Family::Kummer: {
      const Int d = gcd(bm->n, q - 1);
      const auto exponent = static_cast<std::uint64_t>((q - 1) / d);
      for (Int xi = 2; xi < q; ++xi) {
        Element c = bm->rhs(static_cast<Element>(xi));
        if (f.pow(c, exponent) == 1) affine += d;
      }
      break;
    }
    case Family::Hyper: {
      const auto half = static_cast<std::uint64_t>((q - 1) / 2);
      for (Int xi = 0; xi < q; ++xi) {
        Element v = bm->rhs(static_cast<Element>(xi));
        if (v == 0)
          affine += 1;
        else if (f.pow(v, half) == 1)
          affine += 2;
      }
      break;
    }
    case Family::ASPower:
    case Family::Homma:
      for (Int xi = 0; xi < q; ++xi)
        if (f.trace(bm->rhs(static_cast<Element>(xi))) == 0) affine += bm->p;
      break;
    case Family::ASRational: {
      RationalASSolver solver(*bm);
      if (!solver.kernel_nontrivial) {
        affine = q - 1;
        break;
      }
      for (Int xi = 1; xi < q; ++xi)
        if (f.trace(f.mul(bm->rhs(static_cast<Element>(xi)), solver.w)) == 0)
          affine += bm->p;
      break;
    }
  }
  Int total = affine + bm->extra_places();
  check_hasse_weil(model, field, total);
  return total;
}

Int count_places(const CurveModel& model, const FiniteField& field) {
  return count_places(model, field, field);
}

Int count_places_naive(const CurveModel& model, const FiniteField& field,
                       const FiniteField& param_field) {
  const Int q = field.order();
  if (q > kNaiveCountLimit)
    throw Error(ErrorKind::FieldTooLarge,
                "naive count limited to q <= " + std::to_string(kNaiveCountLimit));
  auto bm = bind(model, field, param_field);
  std::vector<Element> lhs(static_cast<std::size_t>(q));
  for (Int yi = 0; yi < q; ++yi)
    lhs[static_cast<std::size_t>(yi)] = bm->lhs(static_cast<Element>(yi));
  Int affine = 0;
  for (Int xi = 0; xi < q; ++xi) {
    auto x = static_cast<Element>(xi);
    if (!bm->counted_x(x)) continue;
    Element target = bm->rhs(x);
    for (Int yi = 0; yi < q; ++yi)
      if (lhs[static_cast<std::size_t>(yi)] == target) ++affine;
  }
  Int total = affine + bm->extra_places();
  check_hasse_weil(model, field, total);
  return total;
}

Int count_places_naive(const CurveModel& model, const FiniteField& field) {
  return count_places_naive(model, field, field);
}

PlaceCountSeries place_count_series(const CurveModel& model,
                                    const FieldSpec& base, unsigned depth,
                                    Int max_field) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");
  const Int q = base.order();
  Int top = 1;
  for (unsigned j = 0; j < depth; ++j) {
    if (__builtin_mul_overflow(top, q, &top) || top > max_field)
      throw Error(ErrorKind::FieldTooLarge,
                  "F_" + std::to_string(q) + "^" + std::to_string(depth) +
                      " exceeds the series limit " + std::to_string(max_field));
  }
  FiniteField base_field(base);
  PlaceCountSeries series{model, base, {}};
  series.counts.push_back(count_places(model, base_field));
  for (unsigned j = 2; j <= depth; ++j) {
    FiniteField ext(FieldSpec::least(base.p, base.k * j));
    series.counts.push_back(count_places(model, ext, base_field));
  }
  return series;
}

std::optional<ZetaFit> zeta_genus(Int q, const std::vector<Int>& counts,
                                  Genus g_max) {
  if (g_max < 0) throw Error(ErrorKind::InvalidArgument, "g_max must be >= 0");
  if (counts.size() < static_cast<std::size_t>(2 * g_max))
    throw Error(ErrorKind::InsufficientCounts,
                "need " + std::to_string(2 * g_max) + " counts, have " +
                    std::to_string(counts.size()));
  const std::size_t len = counts.size();
  // Power sums of the Frobenius eigenvalues: s_j = q^j + 1 - N_j.
  std::vector<Int> s(len + 1, 0);
  std::vector<Int> q_pow(len + 1, 1);
  for (std::size_t j = 1; j <= len; ++j) {
    q_pow[j] = checked_mul(q_pow[j - 1], q);
    s[j] = checked_sub(checked_add(q_pow[j], 1), counts[j - 1]);
  }

  for (Genus g = 0; g <= g_max; ++g) {
    const auto deg = static_cast<std::size_t>(2 * g);
    std::vector<Int> c(std::max(deg, len) + 1, 0);
    c[0] = 1;
    bool integral = true;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(g); ++n) {
      Int acc = 0;
      for (std::size_t i = 1; i <= n; ++i)
        acc = checked_add(acc, checked_mul(s[i], c[n - i]));
      if (acc % static_cast<Int>(n) != 0) {
        integral = false;
        break;
      }
      c[n] = -acc / static_cast<Int>(n);
    }
    if (!integral) continue;
    for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i)
      c[deg - i] = checked_mul(checked_pow(q, static_cast<unsigned>(g - i)), c[i]);

    bool matches = true;
    for (std::size_t n = static_cast<std::size_t>(g) + 1; n <= len && matches;
         ++n) {
      Int predicted = checked_mul(-static_cast<Int>(n), c[n]);
      for (std::size_t i = 1; i < n; ++i)
        predicted = checked_sub(predicted, checked_mul(s[i], c[n - i]));
      matches = predicted == s[n];
    }
    if (matches) {
      c.resize(deg + 1);
      return ZetaFit{g, std::move(c)};
    }
  }
  return std::nullopt;
}

std::optional<ZetaFit> zeta_genus(const PlaceCountSeries& series, Genus g_max) {
  return zeta_genus(series.base.order(), series.counts, g_max);
}

std::vector<AffinePoint> affine_points(const CurveModel& model,
                                       const FiniteField& field) {
  auto bm = bind(model, field, field);
  const Int q = field.order();
  std::vector<std::pair<Element, Element>> by_value;  // (Y(y), y)
  by_value.reserve(static_cast<std::size_t>(q));
  for (Int yi = 0; yi < q; ++yi) {
    auto y = static_cast<Element>(yi);
    by_value.emplace_back(bm->lhs(y), y);
  }
  std::sort(by_value.begin(), by_value.end());
  std::vector<AffinePoint> points;
  for (Int xi = 0; xi < q; ++xi) {
    auto x = static_cast<Element>(xi);
    if (bm->family == Family::ASRational && x == 0) continue;
    Element target = bm->rhs(x);
    auto lo = std::lower_bound(by_value.begin(), by_value.end(),
                               std::make_pair(target, Element{0}));
    for (auto it = lo; it != by_value.end() && it->first == target; ++it)
      points.emplace_back(x, it->second);
  }
  return points;
}

OrbitReport verify_automorphism(const CurveModel& model,
                                const FiniteField& field,
                                const AutomorphismDescriptor& descriptor,
                                const AutomorphismBinding& binding) {
  auto bm = bind(model, field, field);
  const auto& f = field;
  const auto expected = generator(model);
  if (descriptor.action != ActionKind::Identity &&
      descriptor.action != expected.action)
    throw Error(ErrorKind::InvalidArgument,
                "descriptor action does not belong to " +
                    std::string(family_name(model)));

  OrbitReport report;
  report.expected_order = descriptor.order;
  if (descriptor.zeta_order > 0) {
    if (binding.zeta) {
      if (*binding.zeta == 0 ||
          f.multiplicative_order(*binding.zeta) != descriptor.zeta_order)
        precondition("supplied zeta does not have order " +
                     std::to_string(descriptor.zeta_order));
      report.zeta = *binding.zeta;
    } else {
      report.zeta = f.root_of_unity(descriptor.zeta_order);
    }
  }
  if (descriptor.action == ActionKind::InvertXShiftY) {
    auto is_root = [&](Element g) {
      return g != 0 &&
             f.add(f.mul(bm->b, f.pow(g, static_cast<std::uint64_t>(bm->p))),
                   f.mul(bm->c, g)) == 0;
    };
    if (binding.gamma) {
      if (!is_root(*binding.gamma))
        precondition("supplied gamma is not a nonzero root of bY^p + cY");
      report.gamma = *binding.gamma;
    } else {
      bool found = false;
      for (Int cand = 1; cand < f.order() && !found; ++cand)
        if (is_root(static_cast<Element>(cand))) {
          report.gamma = static_cast<Element>(cand);
          found = true;
        }
      if (!found)
        precondition("bY^p + cY has no nonzero root in F_" +
                     std::to_string(f.order()));
    }
  }

  auto apply = [&](AffinePoint pt) -> AffinePoint {
    auto [x, y] = pt;
    switch (descriptor.action) {
      case ActionKind::Identity: return {x, y};
      case ActionKind::ScaleY: return {x, f.mul(report.zeta, y)};
      case ActionKind::ScaleXNegateY: return {f.mul(report.zeta, x), f.neg(y)};
      case ActionKind::ScaleXShiftY: return {f.mul(report.zeta, x), f.add(y, 1)};
      case ActionKind::InvertXShiftY:
        return {f.inv(f.mul(bm->a, x)), f.add(y, report.gamma)};
      case ActionKind::ShiftY: return {x, f.add(y, 1)};
    }
    return pt;
  };

  const auto points = affine_points(model, field);
  report.affine_points = static_cast<Int>(points.size());
  const auto key = [&](AffinePoint pt) {
    return static_cast<std::uint64_t>(pt.first) * static_cast<std::uint64_t>(f.order()) +
           pt.second;
  };
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(key(points[i]), i);

  std::vector<std::size_t> image(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto img = apply(points[i]);
    auto it = index.find(key(img));
    if (it == index.end() || !bm->on_curve(img.first, img.second))
      throw Error(ErrorKind::NotAnAutomorphism,
                  "image of (" + std::to_string(points[i].first) + ", " +
                      std::to_string(points[i].second) + ") is off the curve");
    image[i] = it->second;
  }
  std::vector<bool> hit(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (hit[image[i]])
      throw Error(ErrorKind::NotAnAutomorphism, "map is not injective on points");
    hit[image[i]] = true;
  }

  std::vector<bool> seen(points.size(), false);
  Int order = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (seen[i]) continue;
    Int size = 0;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++size;
    }
    ++report.orbit_sizes[size];
    order = lcm(order, size);
    if (size == 1) report.fixed_points.push_back(points[i]);
  }
  report.order = order;

  switch (descriptor.action) {
    case ActionKind::Identity:
      report.fixed_points_consistent =
          report.fixed_points.size() == points.size();
      break;
    case ActionKind::ScaleY:
      report.fixed_points_consistent =
          report.fixed_points ==
          std::vector<AffinePoint>{{Element{0}, Element{0}}, {Element{1}, Element{0}}};
      break;
    default:
      report.fixed_points_consistent = report.fixed_points.empty();
      break;
  }

  if (order != descriptor.order)
    throw Error(ErrorKind::OrderMismatch,
                "permutation has order " + std::to_string(order) +
                    ", expected " + std::to_string(descriptor.order));
  return report;
}

}  // namespace cyclic
