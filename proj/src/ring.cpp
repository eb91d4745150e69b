/*
 * Copyright 2026 The blowup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "blowup/ring.hpp"

#include <algorithm>
#include <set>

namespace blowup {

MonomialOrder::MonomialOrder(std::size_t nvars, std::vector<std::vector<std::size_t>> groups, Kind kind)
    : nvars_(nvars), kind_(kind) {
  if (nvars > kMaxVars) throw ValidationError("at most 32 variables are supported");
  std::vector<bool> seen(nvars, false);
  key_ = kind == Kind::grevlex ? "grevlex" : kind == Kind::lex ? "lex" : "block";
  key_ += ":" + std::to_string(nvars);
  for (const auto& group : groups) {
    if (group.empty()) continue;
    Monomial::Words mask{};
    key_ += "|";
    for (std::size_t v : group) {
      if (v >= nvars || seen[v]) throw ValidationError("monomial order groups must partition the variables");
      seen[v] = true;
      mask[v >> 3] |= 0xffull << ((v & 7) * 8);
      key_ += std::to_string(v) + ",";
    }
    masks_.push_back(mask);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ValidationError("monomial order groups must cover every variable");
  }
  if (masks_.empty()) masks_.push_back(Monomial::Words{});
  single_ = masks_.size() == 1;
}

OrderPtr MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> all(nvars);
  for (std::size_t i = 0; i < nvars; ++i) all[i] = i;
  return std::make_shared<const MonomialOrder>(nvars, std::vector<std::vector<std::size_t>>{all}, Kind::grevlex);
}

OrderPtr MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < nvars; ++i) groups.push_back({i});
  return std::make_shared<const MonomialOrder>(nvars, std::move(groups), Kind::lex);
}

OrderPtr MonomialOrder::elimination(std::size_t nvars, std::span<const std::size_t> eliminated) {
  std::set<std::size_t> front(eliminated.begin(), eliminated.end());
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!front.contains(i)) rest.push_back(i);
  }
  std::vector<std::vector<std::size_t>> groups;
  groups.emplace_back(front.begin(), front.end());
  groups.push_back(std::move(rest));
  return std::make_shared<const MonomialOrder>(nvars, std::move(groups), Kind::block);
}

std::strong_ordering order_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  int c = order.compare(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Ring::Ring(std::uint32_t characteristic, std::vector<VariableBlock> blocks)
    : field_(characteristic), blocks_(std::move(blocks)) {
  std::set<std::string> block_names;
  std::set<std::string> var_names;
  for (const auto& block : blocks_) {
    if (!block_names.insert(block.name).second) throw ValidationError("duplicate block name " + block.name);
    for (const auto& v : block.variables) {
      if (v.empty() || !var_names.insert(v).second) throw ValidationError("duplicate or empty variable name " + v);
      names_.push_back(v);
      var_bideg_.emplace_back(block.x_degree, block.t_degree);
    }
  }
  if (names_.size() > kMaxVars) throw ValidationError("at most 32 variables are supported");
  grevlex_ = MonomialOrder::grevlex(names_.size());
}

RingPtr Ring::make(std::uint32_t characteristic, std::vector<VariableBlock> blocks) {
  return RingPtr(new Ring(characteristic, std::move(blocks)));
}

std::optional<std::size_t> Ring::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool Ring::has_block(std::string_view block) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const auto& b) { return b.name == block; });
}

std::vector<std::size_t> Ring::block_vars(std::string_view block) const {
  std::size_t offset = 0;
  for (const auto& b : blocks_) {
    if (b.name == block) {
      std::vector<std::size_t> out(b.variables.size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = offset + i;
      return out;
    }
    offset += b.variables.size();
  }
  throw ValidationError("ring has no block named " + std::string(block));
}

RingPtr Ring::extended(VariableBlock block) const {
  auto blocks = blocks_;
  blocks.push_back(std::move(block));
  return make(characteristic(), std::move(blocks));
}

bool Ring::same_as(const Ring& other) const {
  if (this == &other) return true;
  if (characteristic() != other.characteristic() || names_ != other.names_) return false;
  if (blocks_.size() != other.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].name != other.blocks_[i].name) return false;
  }
  return true;
}

std::string Ring::describe() const {
  std::string out = "GF(" + std::to_string(characteristic()) + ")[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ",";
    out += names_[i];
  }
  return out + "]";
}

}  // namespace blowup
