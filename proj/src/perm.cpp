#include "godgraph/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <sstream>

#include "godgraph/util.hpp"

namespace godgraph {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  assert(a.size() == b.size());
  Perm r(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::uint64_t factorial(int n) {
  assert(n >= 0 && n <= 20);
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t perm_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  assert(n <= 20);
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

Perm perm_unrank(int n, std::uint64_t rank) {
  assert(n <= 20);
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const int idx = static_cast<int>(rank / f);
    rank %= f;
    p[i] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return p;
}

std::string pack_perm(const Perm& p) {
  std::string s;
  if (p.size() <= 256) {
    s.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) s[i] = static_cast<char>(p[i]);
  } else {
    s.resize(p.size() * 2);
    for (std::size_t i = 0; i < p.size(); ++i) {
      s[2 * i] = static_cast<char>(p[i] & 0xff);
      s[2 * i + 1] = static_cast<char>((p[i] >> 8) & 0xff);
    }
  }
  return s;
}

Perm unpack_perm(const std::string& bytes, int n) {
  Perm p(n);
  if (n <= 256) {
    assert(static_cast<int>(bytes.size()) == n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<unsigned char>(bytes[i]);
  } else {
    assert(static_cast<int>(bytes.size()) == 2 * n);
    for (int i = 0; i < n; ++i) {
      p[i] = static_cast<unsigned char>(bytes[2 * i]) |
             (static_cast<unsigned char>(bytes[2 * i + 1]) << 8);
    }
  }
  return p;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(p[j]);
      ++len;
    }
    if (len >= 2) lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

namespace {

// Extracts the cycles of a line like "(1,28)(2,22)"; points are 1-based.
std::vector<std::vector<int>> parse_cycles(const std::string& line) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
    if (line[i] != '(') throw SpecError("bad cycle notation: " + line);
    ++i;
    std::vector<int> cyc;
    std::string num;
    for (; i < line.size() && line[i] != ')'; ++i) {
      const char c = line[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num.push_back(c);
      } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!num.empty()) { cyc.push_back(std::stoi(num)); num.clear(); }
      } else {
        throw SpecError("bad cycle notation: " + line);
      }
    }
    if (i >= line.size()) throw SpecError("unterminated cycle: " + line);
    ++i;  // skip ')'
    if (!num.empty()) { cyc.push_back(std::stoi(num)); num.clear(); }
    if (cyc.size() < 2) throw SpecError("cycle needs at least two points: " + line);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

int max_point(const std::string& line) {
  int mx = 0;
  std::string num;
  for (const char c : line + " ") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num.push_back(c);
    } else if (!num.empty()) {
      mx = std::max(mx, std::stoi(num));
      num.clear();
    }
  }
  return mx;
}

}  // namespace

Perm parse_perm(const std::string& line, int degree) {
  if (line.find('(') != std::string::npos) {
    Perm p = identity_perm(degree);
    std::vector<bool> moved(degree, false);
    for (const auto& cyc : parse_cycles(line)) {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int from = cyc[k] - 1;
        const int to = cyc[(k + 1) % cyc.size()] - 1;
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw SpecError("point out of range in: " + line);
        if (moved[from]) throw SpecError("point repeated across cycles: " + line);
        moved[from] = true;
        p[from] = to;
      }
    }
    std::vector<bool> hit(degree, false);
    for (const int img : p) {
      if (hit[img]) throw SpecError("not a permutation: " + line);
      hit[img] = true;
    }
    return p;
  }
  // Image list, 1-based.
  std::istringstream in(line);
  std::vector<int> img;
  int v = 0;
  while (in >> v) img.push_back(v - 1);
  if (static_cast<int>(img.size()) > degree)
    throw SpecError("image list longer than degree: " + line);
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] < 0 || img[i] >= degree || used[img[i]])
      throw SpecError("not a permutation: " + line);
    used[img[i]] = true;
    p[i] = img[i];
  }
  for (int i = static_cast<int>(img.size()); i < degree; ++i) {
    if (used[i]) throw SpecError("image list is not closed under its support: " + line);
    p[i] = i;
  }
  return p;
}

std::vector<Perm> parse_perm_lines(const std::vector<std::string>& lines) {
  std::vector<std::string> body;
  int degree = 0;
  for (const auto& raw : lines) {
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    line.erase(0, b);
    if (line.empty()) continue;
    if (body.empty() && degree == 0 && line.rfind("degree", 0) == 0) {
      degree = std::stoi(line.substr(6));
      continue;
    }
    body.push_back(line);
  }
  if (body.empty()) throw SpecError("no permutations in input");
  if (degree == 0) {
    for (const auto& line : body) {
      if (line.find('(') != std::string::npos) {
        degree = std::max(degree, max_point(line));
      } else {
        std::istringstream in(line);
        int count = 0, v = 0, mx = 0;
        while (in >> v) { ++count; mx = std::max(mx, v); }
        degree = std::max({degree, count, mx});
      }
    }
  }
  if (degree <= 0) throw SpecError("could not infer permutation degree");
  std::vector<Perm> out;
  out.reserve(body.size());
  for (const auto& line : body) out.push_back(parse_perm(line, degree));
  return out;
}

std::vector<Perm> load_perm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open permutation file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return parse_perm_lines(lines);
}

}  // namespace godgraph
