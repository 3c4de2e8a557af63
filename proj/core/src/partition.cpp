#include "hecke/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hecke/error.hpp"

namespace hecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw PreconditionError("partition parts must be positive and nonincreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string to_string(const Node& node) {
  return "(" + std::to_string(node.row) + "," + std::to_string(node.col) + "," +
         std::to_string(node.comp + 1) + ")";
}

Multipartition::Multipartition(int r) {
  if (r < 1) throw PreconditionError("a multipartition needs at least one component");
  components_.resize(static_cast<std::size_t>(r));
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw PreconditionError("a multipartition needs at least one component");
  for (const auto& p : components_) size_ += p.size();
}

Multipartition Multipartition::from_parts(const std::vector<std::vector<int>>& parts) {
  std::vector<Partition> comps;
  comps.reserve(parts.size());
  for (const auto& p : parts) comps.emplace_back(p);
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::parse(std::string_view text) {
  auto fail = [&] { return PreconditionError("bad multipartition text: " + std::string(text)); };
  std::vector<std::vector<int>> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = std::min(text.find('|', start), text.size());
    const std::string_view comp = text.substr(start, bar - start);
    parts.emplace_back();
    if (comp != "-") {
      std::size_t pos = 0;
      while (true) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(comp.data() + pos, comp.data() + comp.size(), value);
        if (ec != std::errc()) throw fail();
        parts.back().push_back(value);
        pos = static_cast<std::size_t>(ptr - comp.data());
        if (pos == comp.size()) break;
        if (comp[pos] != ',') throw fail();
        ++pos;
      }
    }
    if (bar == text.size()) break;
    start = bar + 1;
  }
  return from_parts(parts);
}

bool Multipartition::contains(const Node& node) const {
  if (node.comp < 0 || node.comp >= rank() || node.row < 1 || node.col < 1) return false;
  return node.col <= component(node.comp).part(node.row);
}

bool Multipartition::is_removable(const Node& node) const {
  if (node.comp < 0 || node.comp >= rank() || node.row < 1) return false;
  const Partition& p = component(node.comp);
  return node.col >= 1 && node.col == p.part(node.row) && p.part(node.row) > p.part(node.row + 1);
}

bool Multipartition::is_addable(const Node& node) const {
  if (node.comp < 0 || node.comp >= rank() || node.row < 1) return false;
  const Partition& p = component(node.comp);
  return node.col == p.part(node.row) + 1 && (node.row == 1 || p.part(node.row - 1) > p.part(node.row));
}

Multipartition Multipartition::with_node(const Node& node) const {
  if (!is_addable(node)) throw PreconditionError("node " + hecke::to_string(node) + " is not addable");
  Multipartition out = *this;
  auto& parts = out.components_[static_cast<std::size_t>(node.comp)].parts_;
  if (node.row > static_cast<int>(parts.size())) {
    parts.push_back(1);
  } else {
    ++parts[static_cast<std::size_t>(node.row - 1)];
  }
  ++out.size_;
  return out;
}

Multipartition Multipartition::without_node(const Node& node) const {
  if (!is_removable(node)) throw PreconditionError("node " + hecke::to_string(node) + " is not removable");
  Multipartition out = *this;
  auto& parts = out.components_[static_cast<std::size_t>(node.comp)].parts_;
  if (--parts[static_cast<std::size_t>(node.row - 1)] == 0) parts.pop_back();
  --out.size_;
  return out;
}

Multipartition Multipartition::slice(int first, int count) const {
  if (first < 0 || count < 1 || first + count > rank()) throw PreconditionError("component slice out of range");
  return Multipartition(std::vector<Partition>(components_.begin() + first, components_.begin() + first + count));
}

Multipartition Multipartition::concat(std::span<const Multipartition> blocks) {
  std::vector<Partition> comps;
  for (const auto& b : blocks) comps.insert(comps.end(), b.components_.begin(), b.components_.end());
  return Multipartition(std::move(comps));
}

std::string Multipartition::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c > 0) out += '|';
    const auto parts = components_[c].parts();
    if (parts.empty()) {
      out += '-';
      continue;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(parts[i]);
    }
  }
  return out;
}

std::strong_ordering Multipartition::operator<=>(const Multipartition& other) const {
  if (auto cmp = rank() <=> other.rank(); cmp != 0) return cmp;
  for (int c = 0; c < rank(); ++c) {
    if (auto cmp = component(c).length() <=> other.component(c).length(); cmp != 0) return cmp;
  }
  for (int c = 0; c < rank(); ++c) {
    const auto a = component(c).parts();
    const auto b = other.component(c).parts();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto cmp = a[i] <=> b[i]; cmp != 0) return cmp;
    }
  }
  return std::strong_ordering::equal;
}

BoundaryNodes boundary_nodes(const Multipartition& lambda) {
  BoundaryNodes out;
  for (int c = 0; c < lambda.rank(); ++c) {
    const Partition& p = lambda.component(c);
    for (int a = 1; a <= p.length() + 1; ++a) {
      const int here = p.part(a);
      if (a <= p.length() && here > p.part(a + 1)) out.removable.push_back({a, here, c});
      if (a == 1 || p.part(a - 1) > here) out.addable.push_back({a, here + 1, c});
    }
  }
  return out;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

void fill(int r, int c, int remaining, std::vector<std::vector<Partition>>& by_size, std::vector<Partition>& current,
          std::vector<Multipartition>& out) {
  if (c == r - 1) {
    for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
      current.push_back(p);
      out.emplace_back(current);
      current.pop_back();
    }
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
      current.push_back(p);
      fill(r, c + 1, remaining - k, by_size, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<Multipartition> all_multipartitions(int r, int n) {
  if (r < 1 || n < 0) throw PreconditionError("all_multipartitions needs r >= 1 and n >= 0");
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    std::vector<int> prefix;
    partitions_of(k, k, prefix, by_size[static_cast<std::size_t>(k)]);
  }
  std::vector<Multipartition> out;
  std::vector<Partition> current;
  fill(r, 0, n, by_size, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hecke
