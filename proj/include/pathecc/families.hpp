// Copyright 2026 The pathecc Authors
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

#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "pathecc/graph.hpp"

namespace pathecc {

enum class FamilyKind { Path, Cycle, Complete, Star, Claw, Net, Sk, Tk, ThreePk, Union };

/// Named graph family member.
///
/// Canonical labelings (frozen; golden tests depend on them):
///   PATH(n)      0-1-...-(n-1)
///   CYCLE(n)     PATH(n) plus (n-1)-0, n >= 3
///   COMPLETE(n)  all pairs
///   STAR(n)      K_{1,n}: center 0, leaves 1..n
///   CLAW, NET    SK(1), TK(1)
///   SK(k)        branch 0; arm i (i = 0,1,2) is 1+ik, 2+ik, ..., k+ik from
///                the branch outward
///   TK(k)        triangle 0,1,2; arm i is 3+ik, ..., 2+(i+1)k from triangle
///                vertex i outward
///   THREE_PK(k)  UNION(PATH(k), PATH(k), PATH(k))
///   UNION(...)   parts relabeled consecutively in listed order
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int size = 1;
  std::vector<FamilySpec> parts;

  static FamilySpec path(int n) { return {FamilyKind::Path, n, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, n, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::Complete, n, {}}; }
  static FamilySpec star(int n) { return {FamilyKind::Star, n, {}}; }
  static FamilySpec claw() { return {FamilyKind::Claw, 1, {}}; }
  static FamilySpec net() { return {FamilyKind::Net, 1, {}}; }
  static FamilySpec sk(int k) { return {FamilyKind::Sk, k, {}}; }
  static FamilySpec tk(int k) { return {FamilyKind::Tk, k, {}}; }
  static FamilySpec three_pk(int k) { return {FamilyKind::ThreePk, k, {}}; }
  static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
    return {FamilyKind::Union, 0, std::move(parts)};
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

inline void build_into(const FamilySpec& spec, GraphBuilder& b, Vertex base);

inline Vertex family_order(const FamilySpec& s) {
  auto need = [&](bool ok) {
    if (!ok) throw InputError("invalid family parameter");
  };
  switch (s.kind) {
    case FamilyKind::Path:
    case FamilyKind::Complete:
      need(s.size >= 1);
      return s.size;
    case FamilyKind::Cycle:
      need(s.size >= 3);
      return s.size;
    case FamilyKind::Star:
      need(s.size >= 1);
      return s.size + 1;
    case FamilyKind::Claw:
      return 4;
    case FamilyKind::Net:
      return 6;
    case FamilyKind::Sk:
      need(s.size >= 1);
      return 3 * s.size + 1;
    case FamilyKind::Tk:
      need(s.size >= 1);
      return 3 * s.size + 3;
    case FamilyKind::ThreePk:
      need(s.size >= 1);
      return 3 * s.size;
    case FamilyKind::Union: {
      Vertex n = 0;
      for (const auto& p : s.parts) n += family_order(p);
      return n;
    }
  }
  throw InputError("unknown family kind");
}

inline void add_pendant_arms(GraphBuilder& b, Vertex base, Vertex first, int hubs, int k) {
  for (int i = 0; i < 3; ++i) {
    Vertex prev = base + (hubs == 1 ? 0 : i);
    for (int j = 0; j < k; ++j) {
      Vertex cur = base + first + i * k + j;
      b.add_edge(prev, cur);
      prev = cur;
    }
  }
}

inline void build_into(const FamilySpec& s, GraphBuilder& b, Vertex base) {
  const int n = s.size;
  switch (s.kind) {
    case FamilyKind::Path:
      for (int i = 1; i < n; ++i) b.add_edge(base + i - 1, base + i);
      return;
    case FamilyKind::Cycle:
      for (int i = 1; i < n; ++i) b.add_edge(base + i - 1, base + i);
      b.add_edge(base + n - 1, base);
      return;
    case FamilyKind::Complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(base + i, base + j);
      return;
    case FamilyKind::Star:
      for (int i = 1; i <= n; ++i) b.add_edge(base, base + i);
      return;
    case FamilyKind::Claw:
      build_into(FamilySpec::sk(1), b, base);
      return;
    case FamilyKind::Net:
      build_into(FamilySpec::tk(1), b, base);
      return;
    case FamilyKind::Sk:
      add_pendant_arms(b, base, 1, 1, n);
      return;
    case FamilyKind::Tk:
      b.add_edge(base, base + 1);
      b.add_edge(base, base + 2);
      b.add_edge(base + 1, base + 2);
      add_pendant_arms(b, base, 3, 3, n);
      return;
    case FamilyKind::ThreePk:
      build_into(FamilySpec::disjoint_union({FamilySpec::path(n), FamilySpec::path(n),
                                             FamilySpec::path(n)}),
                 b, base);
      return;
    case FamilyKind::Union:
      for (const auto& p : s.parts) {
        build_into(p, b, base);
        base += family_order(p);
      }
      return;
  }
}

}  // namespace detail

inline Graph build_family(const FamilySpec& spec) {
  GraphBuilder b(detail::family_order(spec));
  detail::build_into(spec, b, 0);
  return std::move(b).build();
}

/// P_{2k+1} + P_{k-1}; the second part is omitted when k = 1.
inline FamilySpec long_short_host(int k) {
  std::vector<FamilySpec> parts{FamilySpec::path(2 * k + 1)};
  if (k > 1) parts.push_back(FamilySpec::path(k - 1));
  return FamilySpec::disjoint_union(std::move(parts));
}

inline std::string to_string(const FamilySpec& s) {
  auto sized = [&](const char* name) { return std::string(name) + "(" + std::to_string(s.size) + ")"; };
  switch (s.kind) {
    case FamilyKind::Path: return sized("PATH");
    case FamilyKind::Cycle: return sized("CYCLE");
    case FamilyKind::Complete: return sized("COMPLETE");
    case FamilyKind::Star: return sized("STAR");
    case FamilyKind::Claw: return "CLAW";
    case FamilyKind::Net: return "NET";
    case FamilyKind::Sk: return sized("SK");
    case FamilyKind::Tk: return sized("TK");
    case FamilyKind::ThreePk: return sized("THREE_PK");
    case FamilyKind::Union: {
      std::string out = "UNION(";
      for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "," : "") + to_string(s.parts[i]);
      return out + ")";
    }
  }
  return "?";
}

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  FamilySpec parse_all() {
    FamilySpec out = parse();
    skip();
    if (i_ != s_.size()) fail();
    return out;
  }

 private:
  [[noreturn]] void fail() const {
    throw InputError("malformed family spec \"" + std::string(s_) + "\" at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::string word() {
    skip();
    std::string w;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      w += static_cast<char>(std::toupper(static_cast<unsigned char>(s_[i_++])));
    return w;
  }
  int number() {
    std::string w = word();
    if (w.empty() || w.size() > 9 || !std::all_of(w.begin(), w.end(), ::isdigit)) fail();
    return std::stoi(w);
  }

  FamilySpec parse() {
    std::string name = word();
    if (name == "CLAW") return FamilySpec::claw();
    if (name == "NET") return FamilySpec::net();
    if (!eat('(')) fail();
    FamilySpec out;
    if (name == "UNION") {
      std::vector<FamilySpec> parts{parse()};
      while (eat(',')) parts.push_back(parse());
      out = FamilySpec::disjoint_union(std::move(parts));
    } else {
      int n = number();
      if (name == "PATH") out = FamilySpec::path(n);
      else if (name == "CYCLE") out = FamilySpec::cycle(n);
      else if (name == "COMPLETE") out = FamilySpec::complete(n);
      else if (name == "STAR") out = FamilySpec::star(n);
      else if (name == "SK") out = FamilySpec::sk(n);
      else if (name == "TK") out = FamilySpec::tk(n);
      else if (name == "THREE_PK") out = FamilySpec::three_pk(n);
      else fail();
    }
    if (!eat(')')) fail();
    return out;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses the compact text form produced by to_string, e.g. "SK(2)" or
/// "UNION(PATH(2),PATH(2))". Parameters are validated.
inline FamilySpec parse_family(std::string_view text) {
  FamilySpec spec = detail::SpecParser(text).parse_all();
  (void)detail::family_order(spec);
  return spec;
}

}  // namespace pathecc
