#include "ace/drs.hpp"

#include <map>
#include <set>
#include <sstream>

namespace ace {

std::string referent_name(RefId id) {
  std::string name(1, static_cast<char>('A' + id % 26));
  if (id >= 26) name += std::to_string(id / 26);
  return name;
}

std::string format_arg(const Arg& arg) {
  if (const auto* r = std::get_if<RefId>(&arg)) return referent_name(*r);
  if (const auto* n = std::get_if<Name>(&arg)) return n->value;
  return std::get<Num>(arg).text;
}

namespace {

std::string format_atom(const Atom& a) {
  std::string out = a.pred + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) out += (i ? ", " : "") + format_arg(a.args[i]);
  return out + ")";
}

void print(std::ostream& out, const Drs& drs, int indent);

void print_box(std::ostream& out, const char* label, const Drs& drs, int indent) {
  out << std::string(indent, ' ') << label << '\n';
  print(out, drs, indent + 2);
}

void print(std::ostream& out, const Drs& drs, int indent) {
  const std::string pad(indent, ' ');
  out << pad << '[';
  for (std::size_t i = 0; i < drs.referents.size(); ++i) out << (i ? ", " : "") << referent_name(drs.referents[i]);
  out << "]\n";
  for (const auto& c : drs.conditions) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Atom>) {
            out << pad << format_atom(node) << '\n';
          } else if constexpr (std::is_same_v<T, Not>) {
            print_box(out, "NOT:", *node.body, indent);
          } else if constexpr (std::is_same_v<T, Implies>) {
            print_box(out, "IF:", *node.antecedent, indent);
            print_box(out, "THEN:", *node.consequent, indent);
          } else if constexpr (std::is_same_v<T, Or>) {
            for (std::size_t i = 0; i < node.disjuncts.size(); ++i)
              print_box(out, i == 0 && node.exclusive ? "EITHER:" : "OR:", node.disjuncts[i], indent);
          } else {
            out << pad << "group(" << referent_name(node.group) << ", [";
            for (std::size_t i = 0; i < node.members.size(); ++i)
              out << (i ? ", " : "") << referent_name(node.members[i]);
            out << "])\n";
          }
        },
        c.node);
  }
}

class AlphaMatcher {
 public:
  bool drs(const Drs& a, const Drs& b) {
    if (a.referents.size() != b.referents.size() || a.conditions.size() != b.conditions.size()) return false;
    for (std::size_t i = 0; i < a.referents.size(); ++i)
      if (!bind(a.referents[i], b.referents[i])) return false;
    for (std::size_t i = 0; i < a.conditions.size(); ++i)
      if (!condition(a.conditions[i], b.conditions[i])) return false;
    return true;
  }

 private:
  bool bind(RefId x, RefId y) {
    auto f = fwd_.find(x);
    auto g = bwd_.find(y);
    if (f != fwd_.end() || g != bwd_.end()) return f != fwd_.end() && f->second == y && g != bwd_.end() && g->second == x;
    fwd_[x] = y;
    bwd_[y] = x;
    return true;
  }

  bool arg(const Arg& a, const Arg& b) {
    if (a.index() != b.index()) return false;
    if (const auto* r = std::get_if<RefId>(&a)) return bind(*r, std::get<RefId>(b));
    return a == b;
  }

  bool condition(const Condition& ca, const Condition& cb) {
    if (ca.node.index() != cb.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          const auto& y = std::get<T>(cb.node);
          if constexpr (std::is_same_v<T, Atom>) {
            if (x.pred != y.pred || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
              if (!arg(x.args[i], y.args[i])) return false;
            return true;
          } else if constexpr (std::is_same_v<T, Not>) {
            return drs(*x.body, *y.body);
          } else if constexpr (std::is_same_v<T, Implies>) {
            return drs(*x.antecedent, *y.antecedent) && drs(*x.consequent, *y.consequent);
          } else if constexpr (std::is_same_v<T, Or>) {
            if (x.exclusive != y.exclusive || x.disjuncts.size() != y.disjuncts.size()) return false;
            for (std::size_t i = 0; i < x.disjuncts.size(); ++i)
              if (!drs(x.disjuncts[i], y.disjuncts[i])) return false;
            return true;
          } else {
            if (x.members.size() != y.members.size() || !bind(x.group, y.group)) return false;
            for (std::size_t i = 0; i < x.members.size(); ++i)
              if (!bind(x.members[i], y.members[i])) return false;
            return true;
          }
        },
        ca.node);
  }

  std::map<RefId, RefId> fwd_, bwd_;
};

class AccessChecker {
 public:
  std::optional<std::string> check(const Drs& drs, std::set<RefId> visible) {
    for (auto r : drs.referents) visible.insert(r);
    for (const auto& c : drs.conditions) {
      std::optional<std::string> err;
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Atom>) {
              for (const auto& a : x.args)
                if (const auto* r = std::get_if<RefId>(&a); r && !visible.count(*r))
                  err = "referent " + referent_name(*r) + " is not accessible in " + format_atom(x);
            } else if constexpr (std::is_same_v<T, Not>) {
              err = check(*x.body, visible);
            } else if constexpr (std::is_same_v<T, Implies>) {
              auto inner = visible;
              for (auto r : x.antecedent->referents) inner.insert(r);
              err = check(*x.antecedent, visible);
              if (!err) err = check(*x.consequent, inner);
            } else if constexpr (std::is_same_v<T, Or>) {
              for (const auto& d : x.disjuncts)
                if (!err) err = check(d, visible);
            } else {
              for (auto r : x.members)
                if (!visible.count(r)) err = "group member " + referent_name(r) + " is not accessible";
              if (!visible.count(x.group)) err = "group " + referent_name(x.group) + " is not accessible";
            }
          },
          c.node);
      if (err) return err;
    }
    return std::nullopt;
  }
};

}  // namespace

std::string format_drs(const Drs& drs) {
  std::ostringstream out;
  print(out, drs, 0);
  return out.str();
}

bool alpha_equivalent(const Drs& a, const Drs& b) { return AlphaMatcher().drs(a, b); }

std::optional<std::string> accessibility_violation(const Drs& top) { return AccessChecker().check(top, {}); }

}  // namespace ace
