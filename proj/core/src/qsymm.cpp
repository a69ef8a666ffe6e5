#include "hopfz/qsymm.hpp"

#include <numeric>
#include <sstream>

namespace hopfz::qsymm {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw PreconditionError("composition parts must be >= 1, got " + std::to_string(p));
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Composition parse_composition(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') body += c;
  std::vector<int> parts;
  if (body.empty()) return Composition{};
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed composition '" + text + "'");
    }
    if (used != item.size()) throw ParseError("malformed composition '" + text + "'");
    if (v < 1) throw ParseError("composition '" + text + "' has a part < 1");
    parts.push_back(v);
  }
  return Composition(std::move(parts));
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = 1; p <= remaining; ++p) {
    prefix.push_back(p);
    compositions_rec(remaining - p, prefix, out);
    prefix.pop_back();
  }
}

void add(QSymmElement& x, const Composition& c, const Integer& k) {
  if (k == 0) return;
  auto [it, inserted] = x.try_emplace(c, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) x.erase(it);
  }
}

void expand_rec(const std::vector<int>& parts, std::size_t next_part, int first_var, int numvars,
                std::vector<int>& exps, Polynomial& out) {
  if (next_part == parts.size()) {
    out[exps] += 1;
    return;
  }
  for (int v = first_var; v < numvars; ++v) {
    exps[v] = parts[next_part];
    expand_rec(parts, next_part + 1, v + 1, numvars, exps, out);
    exps[v] = 0;
  }
}

// Quasi-shuffle recursion on the first parts:
// (a,u)*(b,v) = a·(u*(b,v)) + b·((a,u)*v) + (a+b)·(u*v).
QSymmElement quasi_shuffle(const std::vector<int>& a, std::size_t ia, const std::vector<int>& b,
                           std::size_t ib, std::map<std::pair<std::size_t, std::size_t>, QSymmElement>& memo) {
  if (ia == a.size()) return {{Composition(std::vector<int>(b.begin() + ib, b.end())), 1}};
  if (ib == b.size()) return {{Composition(std::vector<int>(a.begin() + ia, a.end())), 1}};
  auto key = std::make_pair(ia, ib);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  QSymmElement out;
  auto prepend = [&](int head, const QSymmElement& tail) {
    for (const auto& [c, k] : tail) {
      std::vector<int> parts{head};
      parts.insert(parts.end(), c.parts().begin(), c.parts().end());
      add(out, Composition(std::move(parts)), k);
    }
  };
  prepend(a[ia], quasi_shuffle(a, ia + 1, b, ib, memo));
  prepend(b[ib], quasi_shuffle(a, ia, b, ib + 1, memo));
  prepend(a[ia] + b[ib], quasi_shuffle(a, ia + 1, b, ib + 1, memo));
  memo.emplace(key, out);
  return out;
}

} // namespace

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  compositions_rec(n, prefix, out);
  return out;
}

Polynomial monomial_expand(const Composition& omega, int numvars) {
  Polynomial out;
  if (numvars < 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(numvars), 0);
  expand_rec(omega.parts(), 0, 0, numvars, exps, out);
  return out;
}

QSymmElement overlapping_shuffle(const Composition& a, const Composition& b) {
  std::map<std::pair<std::size_t, std::size_t>, QSymmElement> memo;
  return quasi_shuffle(a.parts(), 0, b.parts(), 0, memo);
}

QSymmElement multiply(const QSymmElement& x, const QSymmElement& y) {
  QSymmElement out;
  for (const auto& [a, ka] : x)
    for (const auto& [b, kb] : y)
      for (const auto& [c, kc] : overlapping_shuffle(a, b)) add(out, c, ka * kb * kc);
  return out;
}

std::vector<std::pair<Composition, Composition>> deconcatenation(const Composition& omega) {
  const auto& p = omega.parts();
  std::vector<std::pair<Composition, Composition>> out;
  for (std::size_t i = 0; i <= p.size(); ++i)
    out.emplace_back(Composition(std::vector<int>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i))),
                     Composition(std::vector<int>(p.begin() + static_cast<std::ptrdiff_t>(i), p.end())));
  return out;
}

std::map<std::pair<NSymmWord, NSymmWord>, Integer> nsymm_coproduct(const NSymmWord& x) {
  std::map<std::pair<NSymmWord, NSymmWord>, Integer> acc{{{{}, {}}, 1}};
  for (int n : x) {
    if (n < 1) throw PreconditionError("NSymm indices must be >= 1");
    std::map<std::pair<NSymmWord, NSymmWord>, Integer> next;
    for (const auto& [pair, c] : acc) {
      for (int i = 0; i <= n; ++i) {
        auto left = pair.first;
        auto right = pair.second;
        if (i > 0) left.push_back(i);
        if (n - i > 0) right.push_back(n - i);
        next[{std::move(left), std::move(right)}] += c;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

Integer pairing(const NSymmWord& x, const Composition& omega) {
  return x == omega.parts() ? Integer(1) : Integer(0);
}

Integer pairing(const NSymmWord& x, const QSymmElement& element) {
  Integer out = 0;
  for (const auto& [c, k] : element) out += k * pairing(x, c);
  return out;
}

DualityReport verify_duality(int max_weight) {
  DualityReport report;
  report.max_weight = max_weight;
  std::vector<Composition> all;
  for (int n = 0; n <= max_weight; ++n)
    for (auto& c : compositions_of(n)) all.push_back(std::move(c));

  // ⟨Δx, α⊗β⟩ = ⟨x, α·β⟩
  for (const auto& x : all) {
    const auto delta = nsymm_coproduct(x.parts());
    for (const auto& alpha : all) {
      for (const auto& beta : all) {
        if (alpha.weight() + beta.weight() != x.weight()) continue;
        auto it = delta.find({alpha.parts(), beta.parts()});
        const Integer lhs = it == delta.end() ? Integer(0) : it->second;
        const Integer rhs = pairing(x.parts(), overlapping_shuffle(alpha, beta));
        ++report.checks;
        if (lhs != rhs) {
          report.passed = false;
          report.failure = "<ΔZ" + x.to_string() + ", " + alpha.to_string() + "⊗" +
                           beta.to_string() + "> = " + lhs.get_str() + " but <Z" + x.to_string() +
                           ", " + alpha.to_string() + "·" + beta.to_string() + "> = " + rhs.get_str();
          return report;
        }
      }
    }
  }

  // ⟨xy, α⟩ = ⟨x⊗y, Δα⟩
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (x.weight() + y.weight() > max_weight) continue;
      NSymmWord xy = x.parts();
      xy.insert(xy.end(), y.parts().begin(), y.parts().end());
      for (const auto& alpha : all) {
        if (alpha.weight() != x.weight() + y.weight()) continue;
        const Integer lhs = pairing(xy, alpha);
        Integer rhs = 0;
        for (const auto& [l, r] : deconcatenation(alpha))
          rhs += pairing(x.parts(), l) * pairing(y.parts(), r);
        ++report.checks;
        if (lhs != rhs) {
          report.passed = false;
          report.failure = "<Z" + x.to_string() + "Z" + y.to_string() + ", " + alpha.to_string() +
                           "> = " + lhs.get_str() + " but deconcatenation gives " + rhs.get_str();
          return report;
        }
      }
    }
  }
  return report;
}

std::string to_string(const QSymmElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : x) {
    const Integer mag = abs(k);
    if (first) os << (k < 0 ? "-" : "");
    else os << (k < 0 ? " - " : " + ");
    if (mag != 1) os << mag.get_str();
    os << c.to_string();
    first = false;
  }
  return os.str();
}

} // namespace hopfz::qsymm
