#include "magmoid/comb/join.hpp"

#include <algorithm>
#include <map>

namespace magmoid::comb {

namespace {

struct Node {
  TermPtr term;
  std::string parent; // key of the predecessor; empty for the start term
};

struct Side {
  std::map<std::string, Node> visited;
  std::vector<std::string> frontier; // keys, in insertion order
  bool capped = false;

  // returns the key if the term is new
  std::optional<std::string> insert(const TermPtr& t, const std::string& parent) {
    std::string key = print(t);
    auto [it, fresh] = visited.emplace(key, Node{t, parent});
    if (!fresh) return std::nullopt;
    return key;
  }
};

std::vector<TermPtr> path_to(const Side& side, const std::string& key) {
  std::vector<TermPtr> path;
  std::string cur = key;
  while (true) {
    const Node& n = side.visited.at(cur);
    path.push_back(n.term);
    if (n.parent.empty()) break;
    cur = n.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

} // namespace

JoinResult joinable(const TermPtr& a, const TermPtr& b, int fuel, std::size_t width,
                    std::size_t term_cap) {
  JoinResult result;
  Side sa, sb;
  std::string ka = print(a), kb = print(b);
  sa.visited.emplace(ka, Node{a, ""});
  sb.visited.emplace(kb, Node{b, ""});
  sa.frontier.push_back(ka);
  sb.frontier.push_back(kb);

  auto finish = [&](const std::string& key) {
    result.joinable = true;
    result.common = sa.visited.at(key).term;
    result.path_a = path_to(sa, key);
    result.path_b = path_to(sb, key);
    result.explored = sa.visited.size() + sb.visited.size();
  };

  if (ka == kb) { finish(ka); return result; }

  // phase 1: leftmost chains, cheap and often sufficient
  auto chain = [&](Side& self, Side& other, const TermPtr& start,
                   const std::string& start_key) -> std::optional<std::string> {
    TermPtr cur = start;
    std::string cur_key = start_key;
    for (int i = 0; i < fuel; ++i) {
      auto s = step(cur);
      if (!s) return std::nullopt;
      cur = s->result;
      if (cur->size() > term_cap) return std::nullopt;
      auto key = self.insert(cur, cur_key);
      if (!key) return std::nullopt; // cycle onto a known term
      cur_key = *key;
      self.frontier.push_back(cur_key);
      if (other.visited.count(cur_key)) return cur_key;
    }
    return std::nullopt;
  };
  if (auto hit = chain(sa, sb, a, ka)) { finish(*hit); return result; }
  if (auto hit = chain(sb, sa, b, kb)) {
    result.joinable = true;
    result.common = sb.visited.at(*hit).term;
    result.path_a = path_to(sa, *hit);
    result.path_b = path_to(sb, *hit);
    result.explored = sa.visited.size() + sb.visited.size();
    return result;
  }

  // phase 2: synchronised breadth-first over all one-step reducts
  auto expand = [&](Side& self, Side& other) -> std::optional<std::string> {
    if (self.capped) { self.frontier.clear(); return std::nullopt; }
    std::vector<std::string> next;
    for (const std::string& key : self.frontier) {
      TermPtr t = self.visited.at(key).term;
      for (const Step& s : all_steps(t)) {
        if (s.result->size() > term_cap) continue;
        auto child = self.insert(s.result, key);
        if (!child) continue;
        if (other.visited.count(*child)) return *child;
        next.push_back(*child);
        if (next.size() > width) { self.capped = true; break; }
      }
      if (self.capped) break;
    }
    self.frontier = std::move(next);
    return std::nullopt;
  };

  for (int depth = 0; depth < fuel; ++depth) {
    if (sa.frontier.empty() && sb.frontier.empty()) break;
    if (auto hit = expand(sa, sb)) { finish(*hit); return result; }
    if (auto hit = expand(sb, sa)) {
      result.joinable = true;
      result.common = sb.visited.at(*hit).term;
      result.path_a = path_to(sa, *hit);
      result.path_b = path_to(sb, *hit);
      result.explored = sa.visited.size() + sb.visited.size();
      return result;
    }
  }

  result.joinable = false;
  result.explored = sa.visited.size() + sb.visited.size();
  return result;
}

FpcResult check_fpc(const TermPtr& f, int fuel, std::size_t width) {
  FpcResult r;
  std::string name = "x";
  for (int i = 0; contains_atom(f, name); ++i) name = "x" + std::to_string(i);
  r.fresh_atom = name;
  TermPtr x = Term::atom(name);
  TermPtr fx = Term::app(f, x);
  r.join = joinable(fx, Term::app(x, fx), fuel, width);
  r.verdict = r.join.joinable ? FpcVerdict::verified : FpcVerdict::not_within_budget;
  return r;
}

} // namespace magmoid::comb
