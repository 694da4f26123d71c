#include "metacyclic/group.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>

#include "metacyclic/error.hpp"

namespace metacyclic {

namespace {

std::string tuple_text(std::initializer_list<std::int64_t> values) {
  std::string s = "(";
  for (auto v : values) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(v);
  }
  return s + ")";
}

void check_element_budget(std::size_t size, std::size_t max_elements) {
  if (size > max_elements)
    fail(ErrorKind::budget, "group of order " + std::to_string(size) + " exceeds the element budget of " +
                                std::to_string(max_elements));
}

// Right multiplication by x, x^-1, y, y^-1 as flat index tables.
template <Presentation P>
std::array<std::vector<std::uint32_t>, 4> generator_tables(const P& group) {
  const GroupElement gens[4] = {group.x_power(1), group.x_power(-1), group.y_power(1), group.y_power(-1)};
  std::array<std::vector<std::uint32_t>, 4> tables;
  for (auto& t : tables) t.resize(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    const GroupElement g = group.element(i);
    for (int j = 0; j < 4; ++j) tables[j][i] = static_cast<std::uint32_t>(group.index(group.multiply(g, gens[j])));
  }
  return tables;
}

template <Presentation P>
NormTable bfs_norms(const P& group, std::size_t max_elements) {
  check_element_budget(group.size(), max_elements);
  const auto tables = generator_tables(group);
  NormTable table;
  table.m = group.x_order();
  table.n = group.n();
  table.norms.assign(group.size(), -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(group.size());
  queue.push_back(0);
  table.norms[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    const std::int32_t d = table.norms[v] + 1;
    for (const auto& t : tables) {
      const std::uint32_t w = t[v];
      if (table.norms[w] < 0) {
        table.norms[w] = d;
        queue.push_back(w);
      }
    }
  }
  table.diameter = *std::max_element(table.norms.begin(), table.norms.end());
  return table;
}

}  // namespace

SplitPresentation::SplitPresentation(std::int64_t m, std::int64_t n, Residue k) : m_(m), ctx_(build_context(n, k)) {
  if (m < 1) fail(ErrorKind::validation, "order of x must be positive: m = " + std::to_string(m));
  if (m > kMaxModulus / n) fail(ErrorKind::validation, "group order m*n exceeds 2^31 - 1");
  if (m % ctx_.alpha() != 0)
    fail(ErrorKind::validation, "k^m != 1 (mod n) for " + tuple_text({m, n, k}) + ": ord(k) = " +
                                    std::to_string(ctx_.alpha()) + " does not divide m");
}

GroupElement SplitPresentation::multiply(GroupElement g, GroupElement h) const {
  return {mod(g.a + h.a, m_), mod(g.b * ctx_.power(h.a) + h.b, n())};
}

GroupElement SplitPresentation::invert(GroupElement g) const {
  // (x^a y^b)^-1 = y^-b x^-a = x^-a y^(-b k^-a)
  return {mod(-g.a, m_), mod(-g.b * ctx_.power(-g.a), n())};
}

GroupElement SplitPresentation::x_power(std::int64_t e) const { return {mod(e, m_), 0}; }

GeneralPresentation::GeneralPresentation(std::int64_t m0, std::int64_t ell, std::int64_t n, Residue k)
    : m0_(m0), ell_(ell), ctx_(build_context(n, k)) {
  const auto problems = violations(m0, ell, n, k);
  if (!problems.empty()) {
    std::string msg = "invalid presentation " + tuple_text({m0, ell, n, k}) + ":";
    for (const auto& p : problems) msg += " " + p + ";";
    msg.pop_back();
    fail(ErrorKind::validation, msg);
  }
}

std::vector<std::string> GeneralPresentation::violations(std::int64_t m0, std::int64_t ell, std::int64_t n,
                                                         Residue k) {
  std::vector<std::string> out;
  if (m0 < 1) out.push_back("m0 must be positive");
  if (ell < 1) out.push_back("ell must be positive");
  if (n < 3 || k < 1 || k >= n) {
    out.push_back("k must lie in [1, n-1] with n >= 3");
    return out;
  }
  if (m0 >= 1 && pow_mod(k, m0, n) != 1) out.push_back("k^m0 != 1 (mod n)");
  if (ell >= 1 && ell <= n && ell * (k - 1) % n != 0) out.push_back("n does not divide ell*(k-1)");
  if (ell >= 1 && n % ell != 0) out.push_back("ell does not divide n");
  return out;
}

GroupElement GeneralPresentation::multiply(GroupElement g, GroupElement h) const {
  const std::int64_t s = g.a + h.a;
  const std::int64_t carry = s / m0_;
  return {s - carry * m0_, mod(g.b * ctx_.power(h.a) + h.b + carry * ell_, n())};
}

GroupElement GeneralPresentation::invert(GroupElement g) const {
  if (g.a == 0) return {0, mod(-g.b, n())};
  // h = x^(m0-a) y^c with g h = x^m0 y^(b k^(m0-a) + c) = y^(l + b k^(m0-a) + c)
  const std::int64_t a = m0_ - g.a;
  return {a, mod(-ell_ - g.b * ctx_.power(a), n())};
}

GroupElement GeneralPresentation::x_power(std::int64_t e) const {
  // x^m0 = y^l and y^l is central, so x^e = x^(e mod m0) y^(l floor(e / m0)).
  const std::int64_t q = floor_div(e, m0_);
  return {e - q * m0_, mod(mod(q, n()) * ell_, n())};
}

std::int64_t Path::length() const {
  std::int64_t total = 0;
  for (const auto& s : steps) total += std::abs(s.x) + std::abs(s.y);
  return total;
}

Path Path::inverse() const {
  // (x^a1 y^b1 ... x^at y^bt)^-1 = y^-bt x^-at ... y^-b1 x^-a1
  Path out;
  out.steps.push_back({0, 0});
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    out.steps.back().y = -it->y;
    out.steps.push_back({-it->x, 0});
  }
  std::erase_if(out.steps, [](const Syllable& s) { return s.x == 0 && s.y == 0; });
  return out;
}

void NormTable::write_csv(std::ostream& out) const {
  out << "a,b,norm\n";
  for (std::size_t i = 0; i < norms.size(); ++i)
    out << static_cast<std::int64_t>(i) / n << ',' << static_cast<std::int64_t>(i) % n << ',' << norms[i] << '\n';
  out << "# diameter=" << diameter << '\n';
}

NormTable all_norms(const SplitPresentation& group, std::size_t max_elements) {
  return bfs_norms(group, max_elements);
}

NormTable all_norms(const GeneralPresentation& group, std::size_t max_elements) {
  return bfs_norms(group, max_elements);
}

std::vector<std::int32_t> syllable_bounded_norms(const SplitPresentation& group, std::int64_t max_syllables,
                                                 std::size_t max_elements) {
  if (max_syllables < 1) fail(ErrorKind::validation, "syllable bound must be positive");
  const std::size_t size = group.size();
  const auto layers = static_cast<std::size_t>(max_syllables);
  check_element_budget(size, max_elements);
  if (size * layers * 2 > std::numeric_limits<std::uint32_t>::max())
    fail(ErrorKind::budget, "syllable-bounded state space exceeds 2^32 states");
  const auto tables = generator_tables(group);

  // State (s, phase, g): s syllables opened so far, phase 0 while in the x-run of
  // syllable s and 1 once its y-run started. The word starts in the x-run of syllable 1.
  auto state = [size](std::size_t s, std::size_t phase, std::size_t g) { return ((s - 1) * 2 + phase) * size + g; };
  std::vector<std::int32_t> dist(size * layers * 2, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(dist.size());
  dist[state(1, 0, 0)] = 0;
  queue.push_back(static_cast<std::uint32_t>(state(1, 0, 0)));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    const std::size_t g = v % size;
    const std::size_t layer = v / size;
    const std::size_t s = layer / 2 + 1;
    const std::size_t phase = layer % 2;
    const std::int32_t d = dist[v] + 1;
    auto relax = [&](std::size_t w) {
      if (dist[w] < 0) {
        dist[w] = d;
        queue.push_back(static_cast<std::uint32_t>(w));
      }
    };
    for (int j = 0; j < 2; ++j) {
      if (phase == 0)
        relax(state(s, 0, tables[j][g]));
      else if (s < layers)
        relax(state(s + 1, 0, tables[j][g]));
    }
    for (int j = 2; j < 4; ++j) relax(state(s, 1, tables[j][g]));
  }

  std::vector<std::int32_t> norms(size, std::numeric_limits<std::int32_t>::max());
  for (std::size_t layer = 0; layer < layers * 2; ++layer)
    for (std::size_t g = 0; g < size; ++g) {
      const std::int32_t d = dist[layer * size + g];
      if (d >= 0) norms[g] = std::min(norms[g], d);
    }
  return norms;
}

std::int64_t centered_exponent(std::int64_t a, std::int64_t m) {
  const std::int64_t r = mod(a, m);
  return r <= m / 2 ? r : r - m;
}

namespace {

// Path (**) x^xi y^b_1 x^(i_1-i_2) y^b_2 ... x^(i_(t-1)) y^b_t reaching x^a y^b.
Path template_path(const UnitContext& ctx, std::int64_t a, Residue b, const ExponentSeq& seq) {
  const auto coeffs = min_acs_representation(ctx, seq, b);
  Path path;
  const auto t = seq.size();
  for (std::size_t j = 0; j < t; ++j) {
    const std::int64_t x = j == 0 ? a - seq[0] : seq[j - 1] - seq[j];
    path.steps.push_back({x, coeffs[j]});
  }
  return path;
}

}  // namespace

BoundPath construct_bound_path(const SplitPresentation& group, GroupElement g, const ExponentSeq& prime_seq,
                               std::int64_t weight) {
  const UnitContext& ctx = group.context();
  if (!ctx.neg_one()) fail(ErrorKind::hypothesis, "theorem hypothesis not met: k^(alpha/2) != -1 (mod n)");
  if (prime_seq.alpha() != ctx.alpha() || !prime_seq.reduced())
    fail(ErrorKind::validation, "prime sequence must be reduced with alpha = ord(k)");

  BoundPath out;
  if (g == GroupElement{}) return out;

  const std::int64_t m = group.m();
  const std::int64_t i1 = prime_seq.degree();
  const std::int64_t a = centered_exponent(g.a, m);
  const bool invert = a < 0;
  const GroupElement target = invert ? group.invert(g) : g;
  const std::int64_t ac = invert ? -a : a;

  out.path = template_path(ctx, ac, target.b, prime_seq);
  if (invert) out.path = out.path.inverse();
  std::int64_t acs = 0;
  for (const auto& s : out.path.steps) acs += std::abs(s.y);
  if (acs > weight)
    fail(ErrorKind::validation, "prime sequence " + prime_seq.to_string() + " does not cover Z_n within weight " +
                                    std::to_string(weight));

  if (ac >= i1) {
    out.case_number = invert ? 2 : 1;
    out.length_bound = m / 2 + weight;
  } else {
    out.case_number = 3;
    out.length_bound = 2 * i1 - ac + weight;
  }
  return out;
}

}  // namespace metacyclic
