#include "magmoid/comb/reduce.hpp"

#include <sstream>

namespace magmoid::comb {

namespace {

int arity(char c) {
  switch (c) {
    case 'I': return 1;
    case 'K': case 'W': return 2;
    case 'B': case 'C': case 'S': return 3;
  }
  return -1;
}

// Contracts t itself when it is a constant applied to exactly its arity.
std::optional<std::pair<char, TermPtr>> contract_root(const TermPtr& t) {
  const Term* cur = t.get();
  std::vector<const TermPtr*> rev_args;
  while (cur->kind() == Term::Kind::app) {
    rev_args.push_back(&cur->arg());
    cur = cur->fn().get();
  }
  if (cur->kind() != Term::Kind::constant) return std::nullopt;
  char c = cur->constant_name();
  if (static_cast<int>(rev_args.size()) != arity(c)) return std::nullopt;
  auto nth = [&](std::size_t i) { return *rev_args[rev_args.size() - 1 - i]; };
  switch (c) {
    case 'I': return std::make_pair(c, nth(0));
    case 'K': return std::make_pair(c, nth(0));
    case 'W': return std::make_pair(c, Term::app(Term::app(nth(0), nth(1)), nth(1)));
    case 'B': return std::make_pair(c, Term::app(nth(0), Term::app(nth(1), nth(2))));
    case 'C': return std::make_pair(c, Term::app(Term::app(nth(0), nth(2)), nth(1)));
    case 'S':
      return std::make_pair(
          c, Term::app(Term::app(nth(0), nth(2)), Term::app(nth(1), nth(2))));
  }
  return std::nullopt;
}

std::optional<Step> find_leftmost_outermost(const TermPtr& t) {
  if (auto r = contract_root(t)) return Step{"", r->first, r->second};
  if (t->kind() != Term::Kind::app) return std::nullopt;
  if (auto left = find_leftmost_outermost(t->fn()))
    return Step{"L" + left->pos, left->rule, Term::app(left->result, t->arg())};
  if (auto right = find_leftmost_outermost(t->arg()))
    return Step{"R" + right->pos, right->rule, Term::app(t->fn(), right->result)};
  return std::nullopt;
}

std::optional<Step> find_rightmost_innermost(const TermPtr& t) {
  if (t->kind() == Term::Kind::app) {
    if (auto right = find_rightmost_innermost(t->arg()))
      return Step{"R" + right->pos, right->rule, Term::app(t->fn(), right->result)};
    if (auto left = find_rightmost_innermost(t->fn()))
      return Step{"L" + left->pos, left->rule, Term::app(left->result, t->arg())};
  }
  if (auto r = contract_root(t)) return Step{"", r->first, r->second};
  return std::nullopt;
}

void collect_steps(const TermPtr& root, const TermPtr& t, std::string& pos,
                   std::vector<Step>& out);

TermPtr rebuild_with(const TermPtr& t, std::string_view pos, const TermPtr& replacement) {
  if (pos.empty()) return replacement;
  if (pos.front() == 'L')
    return Term::app(rebuild_with(t->fn(), pos.substr(1), replacement), t->arg());
  return Term::app(t->fn(), rebuild_with(t->arg(), pos.substr(1), replacement));
}

void collect_steps(const TermPtr& root, const TermPtr& t, std::string& pos,
                   std::vector<Step>& out) {
  if (auto r = contract_root(t))
    out.push_back(Step{pos, r->first, rebuild_with(root, pos, r->second)});
  if (t->kind() != Term::Kind::app) return;
  pos.push_back('L');
  collect_steps(root, t->fn(), pos, out);
  pos.back() = 'R';
  collect_steps(root, t->arg(), pos, out);
  pos.pop_back();
}

ReductionTrace normalize_with(const TermPtr& t, int fuel,
                              std::optional<Step> (*pick)(const TermPtr&)) {
  if (fuel < 0) throw InputError("fuel must be non-negative");
  ReductionTrace trace;
  trace.start = t;
  TermPtr cur = t;
  for (int i = 0; i < fuel; ++i) {
    auto s = pick(cur);
    if (!s) {
      trace.normal_form = true;
      return trace;
    }
    cur = s->result;
    trace.steps.push_back(std::move(*s));
  }
  trace.normal_form = !pick(cur).has_value();
  return trace;
}

} // namespace

std::optional<Step> step(const TermPtr& t) { return find_leftmost_outermost(t); }

std::optional<Step> step_rightmost_innermost(const TermPtr& t) {
  return find_rightmost_innermost(t);
}

std::vector<Step> all_steps(const TermPtr& t) {
  std::vector<Step> out;
  std::string pos;
  collect_steps(t, t, pos, out);
  return out;
}

ReductionTrace normalize(const TermPtr& t, int fuel) {
  return normalize_with(t, fuel, step);
}

ReductionTrace normalize_rightmost_innermost(const TermPtr& t, int fuel) {
  return normalize_with(t, fuel, step_rightmost_innermost);
}

std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream os;
  os << "start: " << print(trace.start) << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& s = trace.steps[i];
    os << "  [" << (i + 1) << "] " << s.rule << " @ "
       << (s.pos.empty() ? "root" : s.pos) << " -> " << print(s.result) << "\n";
  }
  std::size_t n = trace.steps.size();
  os << "status: " << (trace.normal_form ? "normal form" : "fuel exhausted")
     << " after " << n << (n == 1 ? " step" : " steps") << "\n";
  return os.str();
}

} // namespace magmoid::comb
