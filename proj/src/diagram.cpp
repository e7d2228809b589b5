#include "apa/diagram.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace apa::diagram {

bool is_valid_matching(const std::vector<int>& partner) {
  const int n = int(partner.size());
  if (n % 2) return false;
  for (int i = 0; i < n; ++i) {
    if (partner[i] < 0 || partner[i] >= n || partner[i] == i) return false;
    if (partner[partner[i]] != i) return false;
  }
  return true;
}

bool is_noncrossing(const std::vector<int>& partner) {
  const int n = int(partner.size());
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (partner[i] > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != partner[i]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

const std::vector<std::vector<int>>& noncrossing_matchings(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
  } else {
    std::vector<int> partner(2 * n, -1);
    struct Rec {
      std::vector<int>& p;
      void run(int a, int b, const std::function<void()>& done) {
        if (a > b) { done(); return; }
        for (int q = a + 1; q <= b; q += 2) {
          p[a] = q;
          p[q] = a;
          run(a + 1, q - 1, [&] { run(q + 1, b, done); });
          p[a] = -1;
          p[q] = -1;
        }
      }
    };
    Rec rec{partner};
    rec.run(0, 2 * n - 1, [&] { out.push_back(partner); });
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<int> identity_matching(int n) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < 2 * n; ++i) p[i] = 2 * n - 1 - i;
  return p;
}

std::vector<int> rotate_matching(const std::vector<int>& partner, int clicks) {
  const int n = int(partner.size());
  if (n == 0) return partner;
  auto mod = [&](long v) { return int(((v % n) + n) % n); };
  std::vector<int> out(n);
  // clicks > 0: first point moves to the back, i.e. old point j sits at
  // new position j - clicks.
  for (int i = 0; i < n; ++i) out[mod(i - clicks)] = mod(partner[i] - clicks);
  return out;
}

std::vector<int> reflect_matching(const std::vector<int>& partner) {
  const int n = int(partner.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[n - 1 - i] = n - 1 - partner[i];
  return out;
}

GlueResult glue_matchings(const std::vector<int>& x, const std::vector<int>& y, int m) {
  const int nx = int(x.size()), ny = int(y.size());
  if (m < 0 || m > nx || m > ny) throw std::invalid_argument("glue_matchings: bad m");
  const int total = nx + ny;
  // Node ids: x points 0..nx-1, y points nx..nx+ny-1.
  // Glue edges pair x_{nx-m+i} with y_{m-1-i} (0-based), i = 0..m-1.
  std::vector<int> glue(total, -1);
  for (int i = 0; i < m; ++i) {
    int a = nx - m + i, b = nx + (m - 1 - i);
    glue[a] = b;
    glue[b] = a;
  }
  std::vector<int> match(total);
  for (int i = 0; i < nx; ++i) match[i] = x[i];
  for (int i = 0; i < ny; ++i) match[nx + i] = nx + y[i];

  std::vector<int> node_of_boundary;  // surviving nodes in output order
  for (int i = 0; i < nx - m; ++i) node_of_boundary.push_back(i);
  for (int i = m; i < ny; ++i) node_of_boundary.push_back(nx + i);
  std::vector<int> out_index(total, -1);
  for (int t = 0; t < int(node_of_boundary.size()); ++t) out_index[node_of_boundary[t]] = t;

  std::vector<bool> seen(total, false);
  std::vector<int> result(node_of_boundary.size(), -1);
  for (int start : node_of_boundary) {
    if (seen[start]) continue;
    seen[start] = true;
    int cur = match[start];
    while (out_index[cur] < 0) {
      seen[cur] = true;
      cur = glue[cur];
      seen[cur] = true;
      cur = match[cur];
    }
    seen[cur] = true;
    result[out_index[start]] = out_index[cur];
    result[out_index[cur]] = out_index[start];
  }
  int loops = 0;
  for (int i = 0; i < total; ++i) {
    if (seen[i] || out_index[i] >= 0) continue;
    ++loops;
    int cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      int nxt = match[cur];
      seen[nxt] = true;
      cur = glue[nxt];
    }
  }
  return {std::move(result), loops};
}

}  // namespace apa::diagram
