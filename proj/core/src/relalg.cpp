// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/relalg.hpp"

#include <algorithm>
#include <atomic>

namespace reltrs {

namespace {

std::atomic<int> g_compose_mutation{0};

}  // namespace

CarrierPtr Carrier::make(std::vector<std::string> labels) {
  auto c = std::shared_ptr<Carrier>(new Carrier());
  c->labels_ = std::move(labels);
  c->index_.reserve(c->labels_.size());
  for (std::size_t i = 0; i < c->labels_.size(); ++i) {
    if (!c->index_.emplace(c->labels_[i], i).second) {
      throw std::invalid_argument("duplicate carrier element: " +
                                  c->labels_[i]);
    }
  }
  return c;
}

CarrierPtr Carrier::range(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

CarrierPtr Carrier::of(std::shared_ptr<const Universe> u) {
  auto base = make(u->labels());
  auto c = std::const_pointer_cast<Carrier>(base);
  c->universe_ = std::move(u);
  return c;
}

std::optional<std::size_t> Carrier::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rel::Rel(CarrierPtr c)
    : c_(std::move(c)), n_(c_->size()), w_((n_ + 63) / 64),
      bits_(n_ * w_, 0) {}

std::size_t Rel::count() const {
  std::size_t k = 0;
  for (std::uint64_t w : bits_) k += static_cast<std::size_t>(std::popcount(w));
  return k;
}

bool Rel::empty() const {
  return std::all_of(bits_.begin(), bits_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for_each_pair([&](std::size_t i, std::size_t j) { out.emplace_back(i, j); });
  return out;
}

std::vector<std::pair<std::string, std::string>> Rel::labelled_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for_each_pair([&](std::size_t i, std::size_t j) {
    out.emplace_back(c_->label(i), c_->label(j));
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  if (a == b) return true;
  if (a->universe() != b->universe()) return false;
  return a->labels() == b->labels();
}

void require_same_carrier(const Rel& a, const Rel& b) {
  if (!same_carrier(a.carrier(), b.carrier())) throw CarrierMismatch();
}

bool operator==(const Rel& a, const Rel& b) {
  return same_carrier(a.c_, b.c_) && a.bits_ == b.bits_;
}

Rel bot(CarrierPtr c) { return Rel(std::move(c)); }

Rel top(CarrierPtr c) {
  Rel r(std::move(c));
  for (std::size_t i = 0; i < r.n(); ++i) {
    for (std::size_t j = 0; j < r.n(); ++j) r.set(i, j);
  }
  return r;
}

Rel id(CarrierPtr c) {
  Rel r(std::move(c));
  for (std::size_t i = 0; i < r.n(); ++i) r.set(i, i);
  return r;
}

Rel from_pairs(CarrierPtr c,
               std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Rel r(std::move(c));
  for (auto [i, j] : pairs) {
    if (i >= r.n() || j >= r.n()) {
      throw std::out_of_range("pair index outside carrier");
    }
    r.set(i, j);
  }
  return r;
}

Rel from_labelled_pairs(
    CarrierPtr c, std::span<const std::pair<std::string, std::string>> pairs) {
  Rel r(c);
  for (const auto& [a, b] : pairs) {
    auto i = c->index(a);
    auto j = c->index(b);
    if (!i || !j) {
      throw std::invalid_argument("unknown carrier element in pair (" + a +
                                  ", " + b + ")");
    }
    r.set(*i, *j);
  }
  return r;
}

Rel join(const Rel& a, const Rel& b) {
  require_same_carrier(a, b);
  Rel r = a;
  for (std::size_t i = 0; i < r.n(); ++i) {
    auto dst = r.row(i);
    auto src = b.row(i);
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] |= src[k];
  }
  return r;
}

Rel meet(const Rel& a, const Rel& b) {
  require_same_carrier(a, b);
  Rel r = a;
  for (std::size_t i = 0; i < r.n(); ++i) {
    auto dst = r.row(i);
    auto src = b.row(i);
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] &= src[k];
  }
  return r;
}

bool leq(const Rel& a, const Rel& b) {
  require_same_carrier(a, b);
  for (std::size_t i = 0; i < a.n(); ++i) {
    auto x = a.row(i);
    auto y = b.row(i);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] & ~y[k]) return false;
    }
  }
  return true;
}

namespace {

void mutate(Rel& r) {
  std::optional<std::pair<std::size_t, std::size_t>> victim;
  r.for_each_pair([&](std::size_t i, std::size_t j) {
    if (!victim && i != j && !r.test(j, i)) victim = {i, j};
  });
  if (!victim) return;
  r.reset(victim->first, victim->second);
  r.set(victim->second, victim->first);
}

}  // namespace

Rel compose(const Rel& a, const Rel& b) {
  require_same_carrier(a, b);
  Rel r(a.carrier());
  for (std::size_t i = 0; i < a.n(); ++i) {
    auto dst = r.row(i);
    a.for_each_succ(i, [&](std::size_t j) {
      auto src = b.row(j);
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] |= src[k];
    });
  }
  if (g_compose_mutation.load(std::memory_order_relaxed) > 0) mutate(r);
  return r;
}

Rel converse(const Rel& a) {
  Rel r(a.carrier());
  a.for_each_pair([&](std::size_t i, std::size_t j) { r.set(j, i); });
  return r;
}

Rel power(const Rel& a, unsigned n) {
  Rel r = id(a.carrier());
  for (unsigned k = 0; k < n; ++k) r = compose(r, a);
  return r;
}

// Composition on the left argument preserves joins, so its upper adjoint is
// the join of all atoms {(i, j)} with {(i, j)};b <= c. That atom maps to
// {i} x row_b(j), which gives the row-inclusion test below.
Rel residual_right(const Rel& c, const Rel& b) {
  require_same_carrier(c, b);
  Rel r(c.carrier());
  for (std::size_t i = 0; i < c.n(); ++i) {
    auto ci = c.row(i);
    for (std::size_t j = 0; j < c.n(); ++j) {
      auto bj = b.row(j);
      bool ok = true;
      for (std::size_t k = 0; k < bj.size() && ok; ++k) ok = !(bj[k] & ~ci[k]);
      if (ok) r.set(i, j);
    }
  }
  return r;
}

Rel residual_left(const Rel& a, const Rel& c) {
  return converse(residual_right(converse(c), converse(a)));
}

Rel refl_closure(const Rel& a) { return join(a, id(a.carrier())); }

Rel sym_closure(const Rel& a) { return join(a, converse(a)); }

Rel trans_closure(const Rel& a) { return compose(a, kleene_star(a)); }

// Tarjan's algorithm yields strongly connected components sinks first, so
// each component's reachability row can be assembled from already finished
// successor components.
Rel kleene_star(const Rel& a) {
  const std::size_t n = a.n();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> members;
  std::size_t counter = 0;

  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.for_each_succ(i, [&](std::size_t j) { succ[i].push_back(j); });
  }

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < succ[f.v].size()) {
        std::size_t w = succ[f.v][f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> scc;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = members.size();
          scc.push_back(w);
        } while (w != v);
        members.push_back(std::move(scc));
      }
    }
  }

  Rel r(a.carrier());
  for (const auto& scc : members) {
    std::size_t rep = scc.front();
    auto dst = r.row(rep);
    for (std::size_t v : scc) {
      dst[v / 64] |= std::uint64_t{1} << (v % 64);
      for (std::size_t w : succ[v]) {
        if (comp[w] == comp[rep]) continue;
        auto src = r.row(members[comp[w]].front());
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] |= src[k];
      }
    }
    for (std::size_t v : scc) {
      if (v == rep) continue;
      auto copy = r.row(v);
      std::copy(dst.begin(), dst.end(), copy.begin());
    }
  }
  return r;
}

bool is_coreflexive(const Rel& a) { return leq(a, id(a.carrier())); }

namespace testing {

ScopedComposeMutation::ScopedComposeMutation() { ++g_compose_mutation; }
ScopedComposeMutation::~ScopedComposeMutation() { --g_compose_mutation; }

}  // namespace testing

}  // namespace reltrs
