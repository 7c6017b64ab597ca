#include "latcube/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "latcube/errors.hpp"

namespace latcube {

namespace {

void require_same_order(const Paratopism& a, const Paratopism& b,
                        const char* op) {
  if (a.order() != b.order())
    throw MismatchError(std::string(op) + ": order mismatch (" +
                        std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()) + ")");
}

}  // namespace

Paratopism::Paratopism(std::array<Permutation, 4> parts, Permutation delta)
    : parts_(std::move(parts)), delta_(std::move(delta)) {
  for (const auto& p : parts_)
    if (p.degree() != parts_[0].degree())
      throw MismatchError("paratopism parts must share one degree");
  if (delta_.degree() != 4)
    throw MismatchError("paratopism delta must have degree 4");
}

Paratopism Paratopism::identity(int n) {
  return pure_delta(n, Permutation::identity(4));
}

Paratopism Paratopism::pure_delta(int n, const Permutation& delta) {
  auto e = Permutation::identity(n);
  return Paratopism({e, e, e, e}, delta);
}

Paratopism Paratopism::isotopism(std::array<Permutation, 4> parts) {
  return Paratopism(std::move(parts), Permutation::identity(4));
}

Paratopism compose(const Paratopism& s, const Paratopism& t) {
  require_same_order(s, t, "compose");
  const auto& d = s.delta();
  return Paratopism({s.part(0) * t.part(d(0)), s.part(1) * t.part(d(1)),
                     s.part(2) * t.part(d(2)), s.part(3) * t.part(d(3))},
                    d * t.delta());
}

Paratopism inverse(const Paratopism& s) {
  auto dinv = inverse(s.delta());
  return Paratopism(
      {inverse(s.part(dinv(0))), inverse(s.part(dinv(1))),
       inverse(s.part(dinv(2))), inverse(s.part(dinv(3)))},
      dinv);
}

Paratopism conjugate(const Paratopism& s, const Paratopism& t) {
  require_same_order(s, t, "conjugate");
  return inverse(t) * s * t;
}

Quad act(const Paratopism& s, const Quad& q) {
  Quad out{};
  for (int m = 0; m < 4; ++m) out[s.delta()(m)] = s.part(m)(q[m]);
  return out;
}

std::string ClassSignature::to_string() const {
  std::ostringstream os;
  os << "delta=" << delta_structure.to_string() << " {";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i].cycle_length << ':'
       << entries[i].product_structure.to_string();
  }
  os << '}';
  return os.str();
}

Permutation cycle_product(const Paratopism& s, const Cycle& delta_cycle) {
  auto prod = s.part(delta_cycle.points[0]);
  for (int j = 1; j < delta_cycle.length(); ++j)
    prod = prod * s.part(delta_cycle.points[j]);
  return prod;
}

ClassSignature class_signature(const Paratopism& s) {
  ClassSignature sig;
  sig.delta_structure = cycle_structure(s.delta());
  for (const auto& c : cycle_decomposition(s.delta()))
    sig.entries.push_back({c.length(), cycle_structure(cycle_product(s, c))});
  std::sort(sig.entries.begin(), sig.entries.end());
  return sig;
}

bool are_conjugate(const Paratopism& s1, const Paratopism& s2) {
  require_same_order(s1, s2, "are_conjugate");
  return class_signature(s1) == class_signature(s2);
}

std::optional<Paratopism> conjugator(const Paratopism& s1,
                                     const Paratopism& s2) {
  if (!are_conjugate(s1, s2)) return std::nullopt;
  const int n = s1.order();

  // Match the cycles of delta1 to cycles of delta2 with the same length and
  // conjugate products; first unused candidate wins.
  auto cycles1 = cycle_decomposition(s1.delta());
  auto cycles2 = cycle_decomposition(s2.delta());
  auto key = [](const Paratopism& s, const Cycle& c) {
    return ClassSignature::Entry{c.length(),
                                 cycle_structure(cycle_product(s, c))};
  };
  std::vector<bool> used(cycles2.size(), false);
  std::vector<int> relabel(4);
  for (const auto& c1 : cycles1) {
    auto k1 = key(s1, c1);
    std::size_t match = cycles2.size();
    for (std::size_t j = 0; j < cycles2.size(); ++j) {
      if (!used[j] && key(s2, cycles2[j]) == k1) {
        match = j;
        break;
      }
    }
    if (match == cycles2.size())
      throw std::logic_error("conjugator: signature matched but cycles did not");
    used[match] = true;
    for (int j = 0; j < c1.length(); ++j)
      relabel[c1.points[j]] = cycles2[match].points[j];
  }
  auto relabelling = Paratopism::pure_delta(n, Permutation(relabel));

  // After relabelling both elements share delta2, and each cycle of delta2
  // carries conjugate products on both sides.
  auto moved = conjugate(s1, relabelling);
  const auto& a = moved.parts();
  const auto& b = s2.parts();
  std::vector<std::optional<Permutation>> gamma(4);
  for (const auto& c : cycles2) {
    const auto& pts = c.points;
    const int k = c.length();
    auto r = latcube::conjugator(cycle_product(moved, c), cycle_product(s2, c));
    gamma[pts[0]] = *r;
    if (k == 1) continue;
    gamma[pts[1]] = inverse(a[pts[0]]) * *r * b[pts[0]];
    for (int j = 2; j < k - 1; ++j)
      gamma[pts[j]] = inverse(a[pts[j - 1]]) * *gamma[pts[j - 1]] * b[pts[j - 1]];
    if (k >= 3) gamma[pts[k - 1]] = a[pts[k - 1]] * *r * inverse(b[pts[k - 1]]);
  }
  auto tau = relabelling *
             Paratopism::isotopism({*gamma[0], *gamma[1], *gamma[2], *gamma[3]});
  if (conjugate(s1, tau) != s2)
    throw std::logic_error("conjugator: constructed witness failed to verify");
  return tau;
}

Permutation representative_delta(const CycleStructure& delta_structure) {
  const auto lengths = delta_structure.lengths();
  if (delta_structure.degree() != 4)
    throw InvalidValue("delta structure must have degree 4");
  if (lengths == std::vector<int>{1, 1, 1, 1}) return Permutation::identity(4);
  if (lengths == std::vector<int>{2, 1, 1})
    return Permutation::from_cycles(4, {{0, 1}});
  if (lengths == std::vector<int>{3, 1})
    return Permutation::from_cycles(4, {{0, 1, 2}});
  if (lengths == std::vector<int>{4})
    return Permutation::from_cycles(4, {{0, 1, 2, 3}});
  return Permutation::from_cycles(4, {{0, 2}, {1, 3}});
}

std::vector<Permutation> representative_deltas() {
  return {Permutation::identity(4), Permutation::from_cycles(4, {{0, 1}}),
          Permutation::from_cycles(4, {{0, 1, 2}}),
          Permutation::from_cycles(4, {{0, 1, 2, 3}}),
          Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
}

Paratopism canonical_element(int n, const ClassSignature& sig) {
  auto e = Permutation::identity(n);
  auto canon = [&](std::size_t i) {
    const auto& cs = sig.entries.at(i).product_structure;
    if (cs.degree() != n)
      throw InvalidValue("signature product degree differs from the order");
    return canonical_permutation(cs);
  };
  auto delta = representative_delta(sig.delta_structure);
  // Entries are sorted by (cycle length, structure), which fixes the slots.
  switch (sig.entries.size()) {
    case 4:
      return Paratopism({canon(0), canon(1), canon(2), canon(3)}, delta);
    case 3:  // (1)(1)(2)
      return Paratopism({e, canon(2), canon(0), canon(1)}, delta);
    case 2:
      if (sig.entries[1].cycle_length == 3)  // (1)(3)
        return Paratopism({e, e, canon(1), canon(0)}, delta);
      return Paratopism({e, e, canon(0), canon(1)}, delta);  // (2)(2)
    case 1:
      return Paratopism({e, e, e, canon(0)}, delta);
    default:
      throw InvalidValue("malformed class signature");
  }
}

CanonicalForm canonicalize(const Paratopism& s) {
  auto canonical = canonical_element(s.order(), class_signature(s));
  auto witness = conjugator(s, canonical);
  if (!witness)
    throw std::logic_error("canonicalize: canonical element not conjugate");
  return {std::move(canonical), std::move(*witness)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int largest_symbol(std::string_view s) {
  int best = 0;
  for (std::size_t i = 0; i < s.size();) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
      if (ec != std::errc()) throw ParseError("symbol too large");
      i = ptr - s.data();
      best = std::max(best, v);
    } else {
      ++i;
    }
  }
  return best;
}

}  // namespace

Paratopism parse_paratopism(std::string_view text,
                            std::optional<int> default_order) {
  auto body = trim(text);
  std::optional<int> order;
  if (body.starts_with("n=") || body.starts_with("n =")) {
    auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected ':' after the order prefix");
    auto num = trim(body.substr(body.find('=') + 1, colon - body.find('=') - 1));
    int v = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc() || ptr != num.data() + num.size() || v < 1)
      throw ParseError("bad order in \"" + std::string(text) + "\"");
    order = v;
    body = trim(body.substr(colon + 1));
  }
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError("paratopism must be \"(p1; p2; p3; p4; delta)\"");
  body = body.substr(1, body.size() - 2);

  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    auto semi = body.find(';', start);
    fields.push_back(trim(body.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (fields.size() != 5)
    throw ParseError("paratopism needs 4 parts and a delta separated by ';'");

  if (!order) order = default_order;
  if (!order) {
    int largest = 0;
    for (int m = 0; m < 4; ++m)
      largest = std::max(largest, largest_symbol(fields[m]));
    if (largest < 1)
      throw ParseError("cannot infer the order; prefix the text with \"n=...:\"");
    order = largest;
  }

  auto part = [&](int m) {
    try {
      return parse_permutation(fields[m], *order);
    } catch (const ParseError& e) {
      throw ParseError("part " + std::to_string(m + 1) + ": " + e.what());
    }
  };
  Permutation delta = [&] {
    try {
      return parse_permutation(fields[4], 4);
    } catch (const ParseError& e) {
      throw ParseError(std::string("delta must have degree 4: ") + e.what());
    }
  }();
  return Paratopism({part(0), part(1), part(2), part(3)}, delta);
}

std::string format_paratopism(const Paratopism& s) {
  std::ostringstream os;
  os << "n=" << s.order() << ": (";
  for (int m = 0; m < 4; ++m) os << format_permutation(s.part(m), false) << "; ";
  os << format_permutation(s.delta(), false) << ')';
  return os.str();
}

std::vector<Paratopism> all_paratopisms(int n) {
  auto perms = all_permutations(n);
  auto deltas = all_permutations(4);
  std::vector<Paratopism> out;
  out.reserve(perms.size() * perms.size() * perms.size() * perms.size() *
              deltas.size());
  for (const auto& a : perms)
    for (const auto& b : perms)
      for (const auto& c : perms)
        for (const auto& d : perms)
          for (const auto& delta : deltas) out.emplace_back(std::array{a, b, c, d}, delta);
  return out;
}

Paratopism random_paratopism(int n, std::mt19937_64& rng) {
  return Paratopism({random_permutation(n, rng), random_permutation(n, rng),
                     random_permutation(n, rng), random_permutation(n, rng)},
                    random_permutation(4, rng));
}

}  // namespace latcube
