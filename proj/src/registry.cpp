// Copyright 2026 The progsyn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "progsyn/registry.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace progsyn {

namespace {

struct LambdaName {
  std::string_view text;
  Lambda lambda;
};

constexpr LambdaName kMapLambdas[] = {
    {"+1", Lambda::Inc},   {"-1", Lambda::Dec},   {"*2", Lambda::Mul2},      {"*3", Lambda::Mul3},
    {"*4", Lambda::Mul4},  {"/2", Lambda::Div2},  {"/3", Lambda::Div3},      {"/4", Lambda::Div4},
    {"*(-1)", Lambda::Negate}, {"**2", Lambda::Square},
};
constexpr LambdaName kPredicates[] = {
    {">0", Lambda::Positive}, {"<0", Lambda::Negative}, {"even", Lambda::Even}, {"odd", Lambda::Odd},
};
constexpr LambdaName kBinaryOps[] = {
    {"+", Lambda::Add}, {"-", Lambda::Sub}, {"*", Lambda::Mul}, {"min", Lambda::Min}, {"max", Lambda::Max},
};

template <std::size_t N>
std::optional<Lambda> lookup(const LambdaName (&table)[N], std::string_view text) {
  for (const auto& entry : table) {
    if (entry.text == text) return entry.lambda;
  }
  return std::nullopt;
}

struct FirstOrder {
  std::string_view name;
  BaseFunction function;
  std::uint8_t arity;
  std::array<Type, 2> args;
  Type ret;
};

constexpr FirstOrder kFirstOrder[] = {
    {"HEAD", BaseFunction::Head, 1, {Type::List, Type::List}, Type::Int},
    {"LAST", BaseFunction::Last, 1, {Type::List, Type::List}, Type::Int},
    {"TAKE", BaseFunction::Take, 2, {Type::Int, Type::List}, Type::List},
    {"DROP", BaseFunction::Drop, 2, {Type::Int, Type::List}, Type::List},
    {"ACCESS", BaseFunction::Access, 2, {Type::Int, Type::List}, Type::Int},
    {"MINIMUM", BaseFunction::Minimum, 1, {Type::List, Type::List}, Type::Int},
    {"MAXIMUM", BaseFunction::Maximum, 1, {Type::List, Type::List}, Type::Int},
    {"REVERSE", BaseFunction::Reverse, 1, {Type::List, Type::List}, Type::List},
    {"SORT", BaseFunction::Sort, 1, {Type::List, Type::List}, Type::List},
    {"SUM", BaseFunction::Sum, 1, {Type::List, Type::List}, Type::Int},
};

Type parse_type(std::string_view s) {
  if (s == "INT") return Type::Int;
  if (s == "LIST") return Type::List;
  throw RegistryError("unknown type '" + std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

TokenSpec describe_token(std::string_view name) {
  TokenSpec spec;
  spec.name = std::string(name);
  std::string_view base = name;
  std::string_view param;
  if (auto open = name.find('('); open != std::string_view::npos) {
    if (name.back() != ')') throw RegistryError("malformed token name '" + spec.name + "'");
    base = name.substr(0, open);
    param = name.substr(open + 1, name.size() - open - 2);
    if (param.empty()) throw RegistryError("empty parameter in token name '" + spec.name + "'");
  }

  for (const auto& fo : kFirstOrder) {
    if (fo.name != base) continue;
    spec.function = fo.function;
    spec.arity = fo.arity;
    spec.arg_types = fo.args;
    spec.ret_type = fo.ret;
    if (param.empty()) return spec;
    // Literal-parameterised variant: only the integer-taking functions.
    if (fo.arity != 2) throw RegistryError("token '" + spec.name + "' takes no parameter");
    Int k = 0;
    auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), k);
    if (ec != std::errc{} || ptr != param.data() + param.size()) {
      throw RegistryError("malformed literal in token name '" + spec.name + "'");
    }
    spec.literal = k;
    spec.arity = 1;
    spec.arg_types = {Type::List, Type::List};
    return spec;
  }

  std::optional<Lambda> lambda;
  if (base == "MAP") {
    spec.function = BaseFunction::Map;
    spec.ret_type = Type::List;
    lambda = lookup(kMapLambdas, param);
  } else if (base == "FILTER") {
    spec.function = BaseFunction::Filter;
    spec.ret_type = Type::List;
    lambda = lookup(kPredicates, param);
  } else if (base == "COUNT") {
    spec.function = BaseFunction::Count;
    spec.ret_type = Type::Int;
    lambda = lookup(kPredicates, param);
  } else if (base == "ZIPWITH") {
    spec.function = BaseFunction::ZipWith;
    spec.ret_type = Type::List;
    spec.arity = 2;
    lambda = lookup(kBinaryOps, param);
  } else if (base == "SCANL1") {
    spec.function = BaseFunction::ScanL1;
    spec.ret_type = Type::List;
    lambda = lookup(kBinaryOps, param);
  } else {
    throw RegistryError("unknown token '" + spec.name + "'");
  }
  if (!lambda) throw RegistryError("unknown lambda in token '" + spec.name + "'");
  spec.lambda = *lambda;
  return spec;
}

Registry Registry::deepcoder() {
  std::vector<std::string> names = {"HEAD", "LAST", "TAKE", "DROP", "ACCESS",
                                    "MINIMUM", "MAXIMUM", "REVERSE", "SORT", "SUM"};
  for (const auto& l : kMapLambdas) names.push_back("MAP(" + std::string(l.text) + ")");
  for (const auto& l : kPredicates) names.push_back("FILTER(" + std::string(l.text) + ")");
  for (const auto& l : kPredicates) names.push_back("COUNT(" + std::string(l.text) + ")");
  for (const auto& l : kBinaryOps) names.push_back("ZIPWITH(" + std::string(l.text) + ")");
  for (const auto& l : kBinaryOps) names.push_back("SCANL1(" + std::string(l.text) + ")");
  return from_names(names);
}

Registry Registry::from_names(std::span<const std::string> names) {
  Registry r;
  for (const auto& n : names) {
    if (r.by_name_.contains(n)) throw RegistryError("duplicate token '" + n + "'");
    TokenSpec spec = describe_token(n);
    spec.id = static_cast<TokenId>(r.tokens_.size());
    r.by_name_.emplace(spec.name, spec.id);
    r.tokens_.push_back(std::move(spec));
  }
  r.finalize(fnv1a64(r.serialize()));
  return r;
}

Registry Registry::parse(std::string_view text) {
  Registry r;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    auto where = [&] { return "registry line " + std::to_string(line_no) + ": "; };
    if (fields.size() != 4) throw RegistryError(where() + "expected 4 tab-separated fields");
    std::size_t id = 0;
    auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), id);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) throw RegistryError(where() + "bad id");
    if (id != r.tokens_.size()) throw RegistryError(where() + "ids must be dense and ascending from 0");

    TokenSpec spec = describe_token(fields[1]);
    auto args = split(fields[2], ',');
    if (args.size() != spec.arity) throw RegistryError(where() + "arity does not match token '" + spec.name + "'");
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (parse_type(args[i]) != spec.arg_types[i]) {
        throw RegistryError(where() + "argument types do not match token '" + spec.name + "'");
      }
    }
    if (parse_type(fields[3]) != spec.ret_type) {
      throw RegistryError(where() + "return type does not match token '" + spec.name + "'");
    }
    if (r.by_name_.contains(spec.name)) throw RegistryError(where() + "duplicate token '" + spec.name + "'");
    spec.id = static_cast<TokenId>(id);
    r.by_name_.emplace(spec.name, spec.id);
    r.tokens_.push_back(std::move(spec));
  }
  if (r.tokens_.empty()) throw RegistryError("registry is empty");
  r.finalize(fnv1a64(text));
  return r;
}

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RegistryError("cannot open registry file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Registry Registry::with_tokens(std::span<const std::string> names) const {
  std::vector<std::string> all;
  for (const auto& t : tokens_) all.push_back(t.name);
  for (const auto& n : names) {
    if (!by_name_.contains(n)) all.push_back(n);
  }
  return from_names(all);
}

std::string Registry::serialize() const {
  std::string out;
  for (const auto& t : tokens_) {
    out += std::to_string(t.id);
    out += '\t';
    out += t.name;
    out += '\t';
    for (std::size_t i = 0; i < t.arity; ++i) {
      if (i) out += ',';
      out += to_string(t.arg_types[i]);
    }
    out += '\t';
    out += to_string(t.ret_type);
    out += '\n';
  }
  return out;
}

const TokenSpec& Registry::at(TokenId id) const {
  if (id >= tokens_.size()) throw RegistryError("token id " + std::to_string(id) + " out of range");
  return tokens_[id];
}

std::optional<TokenId> Registry::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

TokenId Registry::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw RegistryError("token '" + std::string(name) + "' is not in the registry");
}

void Registry::finalize(std::uint64_t hash) {
  if (tokens_.size() > std::numeric_limits<TokenId>::max()) throw RegistryError("registry too large");
  hash_ = hash;
}

}  // namespace progsyn
