#include "ordcopies/fin_poset.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "ordcopies/error.hpp"

namespace ordcopies {

FinPoset::FinPoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const std::size_t n = leq_.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (leq_[p].size() != n) throw DomainError("FinPoset: relation matrix is not square");
    if (!leq_[p][p]) throw DomainError("FinPoset: relation is not reflexive at " + std::to_string(p));
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (leq_[p][q])
        for (std::size_t r = 0; r < n; ++r)
          if (leq_[q][r] && !leq_[p][r])
            throw DomainError("FinPoset: relation is not transitive (" + std::to_string(p) + "<=" +
                              std::to_string(q) + "<=" + std::to_string(r) + ")");
}

FinPoset FinPoset::antichain(std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return FinPoset(std::move(m));
}

FinPoset FinPoset::chain(std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = true;
  return FinPoset(std::move(m));
}

FinPoset FinPoset::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("poset: missing size line");
  std::size_t m;
  try {
    std::size_t used = 0;
    m = std::stoul(line, &used);
    if (line.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("poset: bad size line \"" + line + "\"");
  }
  std::vector<std::vector<bool>> rel;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError("poset: expected " + std::to_string(m) + " rows, got " + std::to_string(i));
    std::vector<bool> row;
    for (char c : line) {
      if (c == '0' || c == '1') row.push_back(c == '1');
      else if (!std::isspace(static_cast<unsigned char>(c)))
        throw ParseError("poset: unexpected character '" + std::string(1, c) + "' in row " + std::to_string(i));
    }
    if (row.size() != m)
      throw ParseError("poset: row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries");
    rel.push_back(std::move(row));
  }
  if (next_line()) throw ParseError("poset: trailing input after matrix");
  return FinPoset(std::move(rel));
}

std::string FinPoset::to_text() const {
  std::string out = std::to_string(size()) + "\n";
  for (const auto& row : leq_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

bool FinPoset::compatible(std::size_t p, std::size_t q) const {
  for (std::size_t r = 0; r < size(); ++r)
    if (leq_[r][p] && leq_[r][q]) return true;
  return false;
}

bool FinPoset::is_partial_order() const {
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = p + 1; q < size(); ++q)
      if (leq_[p][q] && leq_[q][p]) return false;
  return true;
}

bool is_separative(const FinPoset& P) {
  const std::size_t n = P.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (P.leq(p, q)) continue;
      bool witness = false;
      for (std::size_t r = 0; r < n && !witness; ++r) witness = P.leq(r, p) && !P.compatible(r, q);
      if (!witness) return false;
    }
  return true;
}

FinPoset separative_modification(const FinPoset& P) {
  const std::size_t n = P.size();
  std::vector<std::vector<bool>> star(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      // for all r <= p there is s <= r with s <= q
      bool all = true;
      for (std::size_t r = 0; r < n && all; ++r) {
        if (!P.leq(r, p)) continue;
        bool some = false;
        for (std::size_t s = 0; s < n && !some; ++s) some = P.leq(s, r) && P.leq(s, q);
        all = some;
      }
      star[p][q] = all;
    }
  return FinPoset(std::move(star));
}

SeparativeQuotient separative_quotient_map(const FinPoset& P) {
  FinPoset star = separative_modification(P);
  const std::size_t n = P.size();
  std::vector<std::size_t> class_of(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t p = 0; p < n; ++p) {
    if (class_of[p] != n) continue;
    class_of[p] = reps.size();
    for (std::size_t q = p + 1; q < n; ++q)
      if (class_of[q] == n && star.leq(p, q) && star.leq(q, p)) class_of[q] = reps.size();
    reps.push_back(p);
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) rel[a][b] = star.leq(reps[a], reps[b]);
  return SeparativeQuotient{FinPoset(std::move(rel)), std::move(class_of)};
}

FinPoset product(const FinPoset& P, const FinPoset& Q) {
  const std::size_t n = P.size(), m = Q.size();
  std::vector<std::vector<bool>> rel(n * m, std::vector<bool>(n * m, false));
  for (std::size_t a = 0; a < n * m; ++a)
    for (std::size_t b = 0; b < n * m; ++b)
      rel[a][b] = P.leq(a / m, b / m) && Q.leq(a % m, b % m);
  return FinPoset(std::move(rel));
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FinPoset& P, const FinPoset& Q,
                                                         std::size_t max_size) {
  if (P.size() > max_size || Q.size() > max_size)
    throw DomainError("find_isomorphism: size exceeds cap of " + std::to_string(max_size));
  const std::size_t n = P.size();
  if (Q.size() != n) return std::nullopt;

  // Elements may only map to elements with the same (down, up) degree.
  auto degrees = [n](const FinPoset& X) {
    std::vector<std::pair<std::size_t, std::size_t>> d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (X.leq(j, i)) ++d[i].first;
        if (X.leq(i, j)) ++d[i].second;
      }
    return d;
  };
  auto dp = degrees(P), dq = degrees(Q);
  {
    auto sp = dp, sq = dq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }

  // Assign the most constrained elements first.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::size_t> bucket(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bucket[i] += dp[i] == dp[j];
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bucket[a] < bucket[b]; });

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    std::size_t p = order[depth];
    for (std::size_t q = 0; q < n; ++q) {
      if (used[q] || dq[q] != dp[p]) continue;
      bool ok = P.leq(p, p) == Q.leq(q, q);
      for (std::size_t k = 0; k < depth && ok; ++k) {
        std::size_t a = order[k];
        ok = P.leq(p, a) == Q.leq(q, image[a]) && P.leq(a, p) == Q.leq(image[a], q);
      }
      if (!ok) continue;
      image[p] = q;
      used[q] = true;
      if (extend(depth + 1)) return true;
      used[q] = false;
      image[p] = n;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace ordcopies
