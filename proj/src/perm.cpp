#include "cgt/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cgt {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree <= 0)
    throw std::invalid_argument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>> &cycles) {
  Permutation p(degree);
  for (const auto &cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("cycle point out of range");
      p.images_[from] = to;
    }
  }
  return Permutation(p.images_); // re-validate
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return i;
  return -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::pow(long long e) const {
  std::uint64_t n = order();
  long long r = e % static_cast<long long>(n);
  if (r < 0)
    r += static_cast<long long>(n);
  Permutation acc(degree());
  Permutation base = *this;
  while (r > 0) {
    if (r & 1)
      acc = compose(acc, base);
    base = compose(base, base);
    r >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (int len : cycle_lengths())
    ord = std::lcm<std::uint64_t>(ord, static_cast<std::uint64_t>(len));
  return ord;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> lens;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}

bool Permutation::has_uniform_cycles() const {
  auto lens = cycle_lengths();
  for (int len : lens)
    if (len != lens.front())
      return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i)
      os << ',';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

Permutation Permutation::parse(const std::string &line) {
  std::vector<int> imgs;
  std::string body = line;
  auto l = body.find('[');
  auto r = body.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l)
    throw std::invalid_argument("malformed permutation literal: " + line);
  std::istringstream is(body.substr(l + 1, r - l - 1));
  std::string tok;
  while (std::getline(is, tok, ','))
    imgs.push_back(std::stoi(tok));
  return Permutation(std::move(imgs));
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> imgs(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    imgs[i] = q[p[i]];
  return Permutation(std::move(imgs));
}

Permutation conjugate(const Permutation &p, const Permutation &q) {
  return compose(q.inverse(), compose(p, q));
}

} // namespace cgt
