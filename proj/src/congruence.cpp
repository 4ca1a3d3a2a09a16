#include "lpict/congruence.hpp"

#include <set>

#include "lpict/error.hpp"
#include "normal_form.hpp"

namespace lpict::pi {

namespace {

class Unfolder {
 public:
  Unfolder(std::size_t bound, std::size_t max_variants)
      : bound_(bound), max_(max_variants) {}

  std::vector<Process> run(const Process& p) {
    struct Visitor {
      Unfolder& self;
      std::vector<Process> operator()(const Nil&) const { return {Process::nil()}; }
      std::vector<Process> operator()(const Sum& s) const {
        std::vector<std::vector<Branch>> acc{{}};
        for (const auto& b : s.branches) {
          std::vector<std::vector<Branch>> next;
          for (const auto& cont : self.run(b.continuation)) {
            for (const auto& partial : acc) {
              auto extended = partial;
              extended.push_back({b.prefix, cont});
              next.push_back(std::move(extended));
              self.check(next.size());
            }
          }
          acc = std::move(next);
        }
        std::vector<Process> out;
        for (auto& branches : acc) out.push_back(Process::sum(std::move(branches)));
        return out;
      }
      std::vector<Process> operator()(const Parallel& par) const {
        auto lefts = self.run(par.left);
        auto rights = self.run(par.right);
        std::vector<Process> out;
        for (const auto& l : lefts) {
          for (const auto& r : rights) {
            out.push_back(Process::parallel(l, r));
            self.check(out.size());
          }
        }
        return out;
      }
      std::vector<Process> operator()(const Restriction& r) const {
        std::vector<Process> out;
        for (const auto& body : self.run(r.body))
          out.push_back(Process::restrict(r.name, body));
        return out;
      }
      std::vector<Process> operator()(const Replication& r) const {
        std::vector<Process> out;
        for (const auto& body : self.run(r.body)) {
          Process unfolded = Process::replicate(body);
          out.push_back(unfolded);
          for (std::size_t copies = 1; copies <= self.bound_; ++copies) {
            unfolded = Process::parallel(body, unfolded);
            out.push_back(unfolded);
            self.check(out.size());
          }
        }
        return out;
      }
    };
    return std::visit(Visitor{*this}, p.node().value);
  }

 private:
  void check(std::size_t n) const {
    if (n > max_)
      throw LimitExceeded("replication unfolding exceeds " + std::to_string(max_) +
                          " variants");
  }

  std::size_t bound_;
  std::size_t max_;
};

std::set<std::string> variant_keys(const Process& p, const CongruenceOptions& o) {
  std::set<std::string> keys;
  for (const auto& v : replication_unfoldings(p, o.unfold_bound, o.max_variants))
    keys.insert(detail::canonical_key(detail::normalize(v)));
  return keys;
}

void flatten(const Process& p, std::vector<Process>& out) {
  if (const auto* par = std::get_if<Parallel>(&p.node().value)) {
    flatten(par->left, out);
    flatten(par->right, out);
  } else {
    out.push_back(p);
  }
}

}  // namespace

std::vector<Process> replication_unfoldings(const Process& p, std::size_t bound,
                                            std::size_t max_variants) {
  return Unfolder(bound, max_variants).run(p);
}

std::string canonical_form_key(const Process& p) {
  return detail::canonical_key(detail::normalize(p));
}

bool structurally_congruent(const Process& p, const Process& q,
                            const CongruenceOptions& options) {
  if (canonical_form_key(p) == canonical_form_key(q)) return true;
  if (options.unfold_bound == 0) return false;
  auto kp = variant_keys(p, options);
  auto kq = variant_keys(q, options);
  for (const auto& k : kp)
    if (kq.contains(k)) return true;
  return false;
}

Process standard_form(const Process& p) {
  return detail::to_process(detail::normalize(p));
}

bool is_standard_form(const Process& p) {
  const Process* body = &p;
  while (const auto* r = std::get_if<Restriction>(&body->node().value))
    body = &r->body;
  if (body->is_nil()) return true;

  std::vector<Process> parts;
  flatten(*body, parts);
  bool seen_replication = false;
  for (const auto& part : parts) {
    const auto& v = part.node().value;
    if (std::holds_alternative<Sum>(v)) {
      if (seen_replication) return false;
    } else if (const auto* rep = std::get_if<Replication>(&v)) {
      seen_replication = true;
      if (!is_standard_form(rep->body)) return false;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace lpict::pi
