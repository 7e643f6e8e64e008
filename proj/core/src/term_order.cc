#include "distvar/term_order.h"

#include <algorithm>
#include <sstream>

#include "distvar/errors.h"

namespace distvar {
namespace {

Ordering grevlex_range(const Monomial& a, const Monomial& b, int begin, int end) {
  int da = 0, db = 0;
  for (int i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? Ordering::kGreater : Ordering::kLess;
  for (int i = end - 1; i >= begin; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::kGreater : Ordering::kLess;
  }
  return Ordering::kEqual;
}

}  // namespace

TermOrder TermOrder::grevlex() { return TermOrder(); }

TermOrder TermOrder::lex() {
  TermOrder o;
  o.kind_ = Kind::kLex;
  return o;
}

TermOrder TermOrder::block(int elimination_block_size) {
  if (elimination_block_size < 0) throw RangeError("negative elimination block");
  TermOrder o;
  o.kind_ = Kind::kBlock;
  o.block_size_ = elimination_block_size;
  return o;
}

TermOrder TermOrder::weighted(std::vector<std::int64_t> weights) {
  TermOrder o;
  o.kind_ = Kind::kWeighted;
  o.weights_ = std::move(weights);
  return o;
}

TermOrder TermOrder::refining_negative(const std::vector<int>& u) {
  std::vector<std::int64_t> w(u.size());
  std::transform(u.begin(), u.end(), w.begin(), [](int x) { return -static_cast<std::int64_t>(x); });
  return weighted(std::move(w));
}

Ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != b.num_vars()) throw DimensionError("compare: monomials from different rings");
  const int n = a.num_vars();
  switch (kind_) {
    case Kind::kGrevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? Ordering::kGreater : Ordering::kLess;
      for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::kGreater : Ordering::kLess;
      }
      return Ordering::kEqual;
    case Kind::kLex:
      for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? Ordering::kGreater : Ordering::kLess;
      }
      return Ordering::kEqual;
    case Kind::kBlock: {
      const int k = std::min(block_size_, n);
      Ordering first = grevlex_range(a, b, 0, k);
      if (first != Ordering::kEqual) return first;
      return grevlex_range(a, b, k, n);
    }
    case Kind::kWeighted: {
      const std::int64_t wa = a.weight(weights_);
      const std::int64_t wb = b.weight(weights_);
      if (wa != wb) return wa > wb ? Ordering::kGreater : Ordering::kLess;
      return grevlex_range(a, b, 0, n);
    }
  }
  return Ordering::kEqual;
}

bool TermOrder::is_well_founded() const {
  if (kind_ != Kind::kWeighted) return true;
  return std::all_of(weights_.begin(), weights_.end(), [](std::int64_t w) { return w >= 0; });
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kGrevlex:
      os << "grevlex";
      break;
    case Kind::kLex:
      os << "lex";
      break;
    case Kind::kBlock:
      os << "block(" << block_size_ << ")";
      break;
    case Kind::kWeighted:
      os << "weighted(";
      for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
      os << ")";
      break;
  }
  return os.str();
}

}  // namespace distvar
