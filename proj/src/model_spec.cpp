#include "degseq/model_spec.hpp"

#include <sstream>

#include "degseq/errors.hpp"

namespace degseq {

bool family_is_graph(Family f) {
  return f == Family::Gp || f == Family::Gk || f == Family::Gt;
}

bool family_uses_p(Family f) {
  return f == Family::Gp || f == Family::Ip || f == Family::Bp ||
         f == Family::Vp;
}

bool family_uses_k(Family f) { return f == Family::Gk || f == Family::Bk; }

bool family_uses_t(Family f) { return f == Family::Gt || f == Family::Bt; }

std::string family_name(Family f) {
  switch (f) {
    case Family::Gp: return "gp";
    case Family::Gk: return "gk";
    case Family::Gt: return "gt";
    case Family::Ip: return "ip";
    case Family::Bp: return "bp";
    case Family::Bk: return "bk";
    case Family::Bt: return "bt";
    case Family::Vp: return "vp";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "gp") return Family::Gp;
  if (name == "gk") return Family::Gk;
  if (name == "gt") return Family::Gt;
  if (name == "ip") return Family::Ip;
  if (name == "bp") return Family::Bp;
  if (name == "bk") return Family::Bk;
  if (name == "bt") return Family::Bt;
  if (name == "vp") return Family::Vp;
  return std::nullopt;
}

Family counterpart_family(Family f) {
  switch (f) {
    case Family::Gp: return Family::Vp;
    case Family::Gk: return Family::Bk;
    case Family::Gt: return Family::Bt;
    default:
      throw DomainError("counterpart is defined for graph families only");
  }
}

ModelSpec ModelSpec::with_p(Family f, Shape shape, Rational p) {
  if (!family_uses_p(f))
    throw DomainError("family " + family_name(f) + " does not take p");
  if (sgn(p) <= 0 || p >= 1) throw DomainError("p must lie in (0,1)");
  p.canonicalize();
  ModelSpec spec(f, shape);
  spec.p_ = std::move(p);
  return spec;
}

ModelSpec ModelSpec::with_k(Family f, Shape shape, long long k) {
  if (!family_uses_k(f))
    throw DomainError("family " + family_name(f) + " does not take k");
  if (k < 0 || k > shape.cell_count())
    throw DomainError("k outside [0, cell_count]");
  ModelSpec spec(f, shape);
  spec.k_ = k;
  return spec;
}

ModelSpec ModelSpec::with_t(Family f, Shape shape, std::vector<int> t) {
  if (!family_uses_t(f))
    throw DomainError("family " + family_name(f) + " does not take t");
  if (t.size() != static_cast<std::size_t>(shape.n))
    throw DomainError("t has wrong length");
  for (int v : t) {
    if (v < 0 || v > shape.col_capacity())
      throw DomainError("t entry exceeds the allowed rows of its column");
  }
  ModelSpec spec(f, shape);
  spec.t_ = std::move(t);
  return spec;
}

const Rational& ModelSpec::p() const {
  if (!family_uses_p(family_)) throw DomainError("model has no p parameter");
  return p_;
}

double ModelSpec::p_double() const { return to_double(p()); }

long long ModelSpec::k() const {
  if (!family_uses_k(family_)) throw DomainError("model has no k parameter");
  return k_;
}

const std::vector<int>& ModelSpec::t() const {
  if (!family_uses_t(family_)) throw DomainError("model has no t parameter");
  return t_;
}

long long ModelSpec::fixed_total() const {
  if (family_uses_k(family_)) return k_;
  if (family_uses_t(family_)) {
    long long total = 0;
    for (int v : t_) total += v;
    return total;
  }
  throw DomainError("model fixes no total");
}

std::string ModelSpec::describe() const {
  std::ostringstream out;
  if (shape_.loops_forbidden) out << "dig-";
  out << family_name(family_) << " m=" << shape_.m << " n=" << shape_.n;
  if (family_uses_p(family_)) out << " p=" << p_.get_str();
  if (family_uses_k(family_)) out << " k=" << k_;
  if (family_uses_t(family_)) {
    out << " t=";
    for (std::size_t j = 0; j < t_.size(); ++j) {
      if (j) out << ',';
      out << t_[j];
    }
  }
  return out.str();
}

}  // namespace degseq
