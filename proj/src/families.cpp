#include "cyclic/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

[[noreturn]] void degenerate(const std::string& why) {
  throw Error(ErrorKind::DegenerateModel, why);
}

void require_odd_prime(Int p, const char* family) {
  if (p < 3 || !is_prime(p))
    degenerate(std::string(family) + ": p must be an odd prime, got " +
               std::to_string(p));
}

void require_nonzero(const Param& param, const char* what) {
  if (!param.is_symbolic() && param.is_zero())
    degenerate(std::string(what) + " must be nonzero");
}

Int parse_int(std::string_view text) {
  Int value = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw Error(ErrorKind::InvalidArgument,
                "not an integer: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimitivePair

bool PrimitivePair::is_primitive(Int n, Int r, Int s) noexcept {
  return n >= 3 && n <= kMaxGroupOrder && r >= 1 && s >= 1 && r + s <= n - 1 &&
         gcd(gcd(r, s), n) == 1;
}

PrimitivePair::PrimitivePair(Int n, Int r, Int s) : n_(n), r_(r), s_(s) {
  if (!is_primitive(n, r, s))
    throw Error(ErrorKind::NotPrimitive,
                "(" + std::to_string(r) + ", " + std::to_string(s) +
                    ") is not a primitive pair for N = " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Param

Param Param::symbol(std::string name) {
  Param p;
  p.name_ = std::move(name);
  return p;
}

Param Param::integer(Int value) { return polynomial({value}); }

Param Param::polynomial(std::vector<Int> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  Param p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

Param Param::parse(std::string_view text) {
  if (text.empty())
    throw Error(ErrorKind::InvalidArgument, "empty field element");
  // Identifiers other than the polynomial variable name a free parameter.
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  if (std::isalpha(static_cast<unsigned char>(text.front())) &&
      std::all_of(text.begin(), text.end(), ident_char) &&
      text.find_first_not_of("t0123456789_") != std::string_view::npos)
    return symbol(std::string(text));
  if (text.find('t') == std::string_view::npos)
    return integer(parse_int(text));

  std::map<std::size_t, Int> terms;
  std::size_t i = 0;
  while (i < text.size()) {
    Int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "bad polynomial '" + std::string(text) + "'");
    }
    std::size_t end = text.find_first_of("+-", i);
    std::string_view term = text.substr(i, end - i);
    i = end == std::string_view::npos ? text.size() : end;
    if (term.empty())
      throw Error(ErrorKind::InvalidArgument,
                  "bad polynomial '" + std::string(text) + "'");

    auto tpos = term.find('t');
    Int coeff = 1;
    std::size_t degree = 0;
    if (tpos == std::string_view::npos) {
      coeff = parse_int(term);
    } else {
      if (tpos > 0) coeff = parse_int(term.substr(0, tpos));
      auto rest = term.substr(tpos + 1);
      if (rest.empty()) {
        degree = 1;
      } else if (rest.front() == '^') {
        Int d = parse_int(rest.substr(1));
        if (d < 0 || d > 64)
          throw Error(ErrorKind::InvalidArgument, "bad exponent in polynomial");
        degree = static_cast<std::size_t>(d);
      } else {
        throw Error(ErrorKind::InvalidArgument,
                    "bad polynomial term '" + std::string(term) + "'");
      }
    }
    terms[degree] = checked_add(terms[degree], sign * coeff);
  }
  std::vector<Int> coeffs(terms.rbegin()->first + 1, 0);
  for (auto [d, c] : terms) coeffs[d] = c;
  return polynomial(std::move(coeffs));
}

bool Param::is_zero() const noexcept { return !is_symbolic() && coeffs_.empty(); }

bool Param::is_one() const noexcept {
  return !is_symbolic() && coeffs_.size() == 1 && coeffs_[0] == 1;
}

std::string Param::to_string() const {
  if (is_symbolic()) return name_;
  if (coeffs_.empty()) return "0";
  if (coeffs_.size() == 1) return std::to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    Int c = coeffs_[d];
    if (c == 0) continue;
    if (!first || c < 0) os << (c < 0 ? "-" : "+");
    Int mag = c < 0 ? -c : c;
    if (mag != 1 || d == 0) os << mag;
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Models

KummerModel::KummerModel(PrimitivePair pair) : pair_(pair) {
  if (kummer_genus(pair_) < 2)
    degenerate("Kummer curve of genus " + std::to_string(kummer_genus(pair_)) +
               " < 2");
}

HyperellipticModel::HyperellipticModel(Int g, Param lambda)
    : genus_(g), lambda_(std::move(lambda)) {
  if (g < 2 || g % 2 != 0 || g > kMaxGroupOrder / 2)
    degenerate("hyperelliptic family needs an even genus >= 2, got " +
               std::to_string(g));
  require_nonzero(lambda_, "lambda");
  if (lambda_.is_one()) degenerate("lambda must differ from 1");
}

ASPowerModel::ASPowerModel(Int p, Int m, Param a, Param b)
    : p_(p), m_(m), a_(std::move(a)), b_(std::move(b)) {
  require_odd_prime(p, "aspower");
  if (p == 3) degenerate("aspower: p = 3 is excluded");
  if (m < 2 || gcd(m, p) != 1)
    degenerate("aspower: m must be > 1 and coprime to p");
  if (checked_mul(p, m) > kMaxGroupOrder)
    degenerate("aspower: group order exceeds 2^32");
  require_nonzero(a_, "a");
}

ASRationalModel::ASRationalModel(Int p, Param a, Param b, Param c)
    : p_(p), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  require_odd_prime(p, "asrational");
  if (p == 3) degenerate("asrational: p = 3 is excluded");
  require_nonzero(a_, "a");
  require_nonzero(b_, "b");
  require_nonzero(c_, "c");
}

HommaModel::HommaModel(Int p) : p_(p) {
  require_odd_prime(p, "homma");
  if ((p - 1) / 2 < 2)
    degenerate("homma: p = " + std::to_string(p) + " gives genus < 2");
}

CurveModel parse_model(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::InvalidArgument,
                "model spec must look like family:params, got '" +
                    std::string(spec) + "'");
  auto family = spec.substr(0, colon);
  auto args = split(spec.substr(colon + 1), ',');
  auto expect = [&](std::size_t count) {
    if (args.size() != count)
      throw Error(ErrorKind::InvalidArgument,
                  std::string(family) + " expects " + std::to_string(count) +
                      " parameters");
  };
  if (family == "kummer") {
    expect(3);
    return KummerModel(
        PrimitivePair(parse_int(args[0]), parse_int(args[1]), parse_int(args[2])));
  }
  if (family == "hyper") {
    expect(2);
    return HyperellipticModel(parse_int(args[0]), Param::parse(args[1]));
  }
  if (family == "aspower") {
    expect(4);
    return ASPowerModel(parse_int(args[0]), parse_int(args[1]),
                        Param::parse(args[2]), Param::parse(args[3]));
  }
  if (family == "asrational") {
    expect(4);
    return ASRationalModel(parse_int(args[0]), Param::parse(args[1]),
                           Param::parse(args[2]), Param::parse(args[3]));
  }
  if (family == "homma") {
    expect(1);
    return HommaModel(parse_int(args[0]));
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown model family '" + std::string(family) + "'");
}

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string to_string(const CurveModel& model) {
  return std::visit(
      overloaded{
          [](const KummerModel& m) {
            const auto& pr = m.pair();
            return "kummer:" + std::to_string(pr.n()) + "," +
                   std::to_string(pr.r()) + "," + std::to_string(pr.s());
          },
          [](const HyperellipticModel& m) {
            return "hyper:" + std::to_string(m.genus()) + "," +
                   m.lambda().to_string();
          },
          [](const ASPowerModel& m) {
            return "aspower:" + std::to_string(m.p()) + "," +
                   std::to_string(m.m()) + "," + m.a().to_string() + "," +
                   m.b().to_string();
          },
          [](const ASRationalModel& m) {
            return "asrational:" + std::to_string(m.p()) + "," +
                   m.a().to_string() + "," + m.b().to_string() + "," +
                   m.c().to_string();
          },
          [](const HommaModel& m) { return "homma:" + std::to_string(m.p()); },
      },
      model);
}

std::string_view family_name(const CurveModel& model) {
  static constexpr std::string_view names[] = {"kummer", "hyper", "aspower",
                                               "asrational", "homma"};
  return names[model.index()];
}

Int cyclic_order(const CurveModel& model) {
  return std::visit(
      overloaded{
          [](const KummerModel& m) { return m.pair().n(); },
          [](const HyperellipticModel& m) { return 2 * m.genus() + 2; },
          [](const ASPowerModel& m) { return m.p() * m.m(); },
          [](const ASRationalModel& m) { return 2 * m.p(); },
          [](const HommaModel& m) { return m.p(); },
      },
      model);
}

std::optional<Int> required_characteristic(const CurveModel& model) {
  return std::visit(
      overloaded{
          [](const KummerModel&) -> std::optional<Int> { return std::nullopt; },
          [](const HyperellipticModel&) -> std::optional<Int> {
            return std::nullopt;
          },
          [](const ASPowerModel& m) -> std::optional<Int> { return m.p(); },
          [](const ASRationalModel& m) -> std::optional<Int> { return m.p(); },
          [](const HommaModel& m) -> std::optional<Int> { return m.p(); },
      },
      model);
}

Genus kummer_genus(const PrimitivePair& pair) {
  Int n = pair.n(), r = pair.r(), s = pair.s();
  Int twice = n + 2 - gcd(n, r) - gcd(n, s) - gcd(n, r + s);
  return twice / 2;
}

Genus kummer_genus(Int n, Int r, Int s) {
  return kummer_genus(PrimitivePair(n, r, s));
}

Signature kummer_signature(const PrimitivePair& pair) {
  Int n = pair.n(), r = pair.r(), s = pair.s();
  return Signature(0, {n / gcd(n, r), n / gcd(n, s), n / gcd(n, r + s)});
}

Signature kummer_signature(Int n, Int r, Int s) {
  return kummer_signature(PrimitivePair(n, r, s));
}

Genus genus(const CurveModel& model) {
  return std::visit(
      overloaded{
          [](const KummerModel& m) { return kummer_genus(m.pair()); },
          [](const HyperellipticModel& m) { return m.genus(); },
          [](const ASPowerModel& m) { return (m.p() - 1) * (m.m() - 1) / 2; },
          [](const ASRationalModel& m) { return m.p() - 1; },
          [](const HommaModel& m) { return (m.p() - 1) / 2; },
      },
      model);
}

std::string AutomorphismDescriptor::formula() const {
  auto z = "zeta_" + std::to_string(zeta_order);
  switch (action) {
    case ActionKind::Identity: return "(x,y) -> (x,y)";
    case ActionKind::ScaleY: return "(x,y) -> (x," + z + "*y)";
    case ActionKind::ScaleXNegateY: return "(x,y) -> (" + z + "*x,-y)";
    case ActionKind::ScaleXShiftY: return "(x,y) -> (" + z + "*x,y+1)";
    case ActionKind::InvertXShiftY: return "(x,y) -> (1/(a*x),y+gamma)";
    case ActionKind::ShiftY: return "(x,y) -> (x,y+1)";
  }
  return {};
}

AutomorphismDescriptor identity_descriptor() { return {}; }

AutomorphismDescriptor generator(const CurveModel& model) {
  return std::visit(
      overloaded{
          [](const KummerModel& m) {
            return AutomorphismDescriptor{m.pair().n(), ActionKind::ScaleY,
                                          m.pair().n()};
          },
          [](const HyperellipticModel& m) {
            return AutomorphismDescriptor{2 * m.genus() + 2,
                                          ActionKind::ScaleXNegateY,
                                          m.genus() + 1};
          },
          [](const ASPowerModel& m) {
            return AutomorphismDescriptor{m.p() * m.m(),
                                          ActionKind::ScaleXShiftY, m.m()};
          },
          [](const ASRationalModel& m) {
            return AutomorphismDescriptor{2 * m.p(), ActionKind::InvertXShiftY,
                                          0};
          },
          [](const HommaModel& m) {
            return AutomorphismDescriptor{m.p(), ActionKind::ShiftY, 0};
          },
      },
      model);
}

}  // namespace cyclic
