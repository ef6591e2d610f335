#include "liearr/freelie.hpp"

#include <algorithm>
#include <numeric>

namespace liearr {

int GeneratorList::add(const std::string& name, int degree) {
  if (name.empty()) throw std::invalid_argument("empty generator name");
  if (degree < 1) throw std::invalid_argument("generator '" + name + "' has degree < 1");
  if (index_.count(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
  int id = static_cast<int>(gens_.size());
  gens_.push_back({name, degree});
  index_[name] = id;
  return id;
}

int GeneratorList::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int GeneratorList::require(const std::string& name) const {
  int id = index_of(name);
  if (id < 0) throw std::invalid_argument("unknown generator '" + name + "'");
  return id;
}

std::vector<int> GeneratorList::degrees() const {
  std::vector<int> d;
  d.reserve(gens_.size());
  for (const auto& g : gens_) d.push_back(g.degree);
  return d;
}

int GeneratorList::max_degree() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.degree);
  return m;
}

int word_degree(const GeneratorList& gens, const Word& w) {
  int d = 0;
  for (unsigned char c : w) d += gens[static_cast<int>(c)].degree;
  return d;
}

std::string word_str(const GeneratorList& gens, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += gens[static_cast<unsigned char>(w[i])].name;
  }
  return s;
}

LieTreePtr LieTree::leaf(int gen) {
  if (gen < 0) throw std::invalid_argument("negative generator index");
  auto t = std::shared_ptr<LieTree>(new LieTree());
  t->gen_ = gen;
  return t;
}

LieTreePtr LieTree::node(LieTreePtr left, LieTreePtr right) {
  if (!left || !right) throw std::invalid_argument("null bracket operand");
  auto t = std::shared_ptr<LieTree>(new LieTree());
  t->left_ = std::move(left);
  t->right_ = std::move(right);
  return t;
}

int LieTree::degree(const GeneratorList& gens) const {
  if (is_leaf()) return gens[gen_].degree;
  return left_->degree(gens) + right_->degree(gens);
}

Word LieTree::foliage() const {
  if (is_leaf()) return Word(1, static_cast<char>(gen_));
  return left_->foliage() + right_->foliage();
}

std::string LieTree::str(const GeneratorList& gens) const {
  if (is_leaf()) return gens[gen_].name;
  return "[" + left_->str(gens) + "," + right_->str(gens) + "]";
}

LieElement LieElement::monomial(mpz_class coeff, LieTreePtr tree) {
  LieElement e;
  if (coeff != 0) e.terms_.emplace_back(std::move(coeff), std::move(tree));
  return e;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [c, t] : o.terms_) terms_.emplace_back(-c, t);
  return *this;
}

LieElement LieElement::scaled(const mpz_class& c) const {
  LieElement e;
  if (c == 0) return e;
  for (const auto& [a, t] : terms_) e.terms_.emplace_back(c * a, t);
  return e;
}

std::optional<int> LieElement::homogeneous_degree(const GeneratorList& gens) const {
  std::optional<int> deg;
  for (const auto& [c, t] : terms_) {
    int d = t->degree(gens);
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

std::string LieElement::str(const GeneratorList& gens) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [c, t] = terms_[i];
    mpz_class a = c;
    if (i == 0) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) s += a.get_str() + "*";
    s += t->str(gens);
  }
  return s;
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [ca, ta] : a.terms())
    for (const auto& [cb, tb] : b.terms())
      out += LieElement::monomial(ca * cb, LieTree::node(ta, tb));
  return out;
}

LieElement ad_word(const Word& prefix, const LieElement& e) {
  LieElement out = e;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    LieElement next;
    for (const auto& [c, t] : out.terms())
      next += LieElement::monomial(c, LieTree::node(LieTree::leaf(static_cast<unsigned char>(*it)), t));
    out = std::move(next);
  }
  return out;
}

PolyZ expand(const LieTreePtr& t) {
  if (t->is_leaf()) {
    PolyZ p;
    p[Word(1, static_cast<char>(t->gen()))] = 1;
    return p;
  }
  PolyZ l = expand(t->left());
  PolyZ r = expand(t->right());
  PolyZ out = poly_mul(l, r);
  for (const auto& [w, c] : poly_mul(r, l)) {
    auto it = out.find(w);
    if (it == out.end()) {
      out.emplace(w, -c);
    } else {
      it->second -= c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

PolyZ expand(const LieElement& e) {
  PolyZ out;
  for (const auto& [c, t] : e.terms()) {
    for (const auto& [w, a] : expand(t)) {
      auto it = out.find(w);
      if (it == out.end()) {
        mpz_class v = c * a;
        if (v != 0) out.emplace(w, std::move(v));
      } else {
        it->second += c * a;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
  PolyZ out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      auto it = out.find(wa + wb);
      if (it == out.end()) {
        mpz_class v = ca * cb;
        if (v != 0) out.emplace(wa + wb, std::move(v));
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  if (w.size() == 1) return true;
  const std::size_t n = w.size();
  for (std::size_t k = 1; k < n; ++k) {
    // compare w with its rotation starting at k
    Word rot = w.substr(k) + w.substr(0, k);
    if (!(w < rot)) return false;
  }
  return true;
}

LieTreePtr standard_bracketing(const Word& w) {
  if (w.size() == 1) return LieTree::leaf(static_cast<unsigned char>(w[0]));
  // Longest proper suffix that is Lyndon.
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word suffix = w.substr(i);
    if (is_lyndon(suffix))
      return LieTree::node(standard_bracketing(w.substr(0, i)), standard_bracketing(suffix));
  }
  throw std::invalid_argument("not a Lyndon word");
}

LyndonBasis LyndonBasis::build(const GeneratorList& gens, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  const int n = gens.size();
  if (n == 0) throw std::invalid_argument("empty alphabet");
  LyndonBasis basis;
  basis.by_degree_.assign(static_cast<std::size_t>(max_degree) + 1, {});

  // Duval's generation of Lyndon words of length <= max_degree in lex order;
  // generator degrees are >= 1 so longer words can only have larger weight.
  const int maxlen = max_degree;
  std::string w(1, '\0');
  while (!w.empty()) {
    int deg = word_degree(gens, w);
    if (deg <= max_degree) basis.by_degree_[static_cast<std::size_t>(deg)].push_back(w);
    std::size_t len = w.size();
    while (static_cast<int>(w.size()) < maxlen) w += w[w.size() % len];
    while (!w.empty() && static_cast<unsigned char>(w.back()) == static_cast<unsigned>(n - 1))
      w.pop_back();
    if (!w.empty()) w.back() = static_cast<char>(static_cast<unsigned char>(w.back()) + 1);
  }

  for (int d = 1; d <= max_degree; ++d) {
    auto& words = basis.by_degree_[static_cast<std::size_t>(d)];
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size(); ++i) basis.index_[words[i]] = {d, i};
  }
  basis.bracketings_.assign(basis.by_degree_.size(), {});
  basis.expansions_.assign(basis.by_degree_.size(), {});
  return basis;
}

const LieTreePtr& LyndonBasis::bracketing(int degree, std::size_t i) const {
  const auto& words = entries(degree);
  auto& cache = bracketings_[static_cast<std::size_t>(degree)];
  if (cache.empty()) cache.resize(words.size());
  auto& slot = cache.at(i);
  if (!slot) slot = standard_bracketing(words[i]);
  return slot;
}

const PolyZ& LyndonBasis::expansion(int degree, std::size_t i) const {
  entries(degree);  // range check
  auto& cache = expansions_[static_cast<std::size_t>(degree)];
  if (cache.empty()) cache.resize(size(degree));
  auto& slot = cache.at(i);
  if (slot.empty()) slot = expand(bracketing(degree, i));
  return slot;
}

std::optional<std::pair<int, std::size_t>> LyndonBasis::find(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Moebius function of small n by trial factorization.
int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

long long witt_dimension(const std::vector<int>& degrees, int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  for (int w : degrees)
    if (w < 1) throw std::invalid_argument("generator weights must be >= 1");
  // m[e] = number of generators of weight e
  std::vector<mpz_class> m(static_cast<std::size_t>(d) + 1, 0);
  for (int w : degrees)
    if (w <= d) m[static_cast<std::size_t>(w)] += 1;
  // Tensor algebra word counts: a[n] = sum_e m[e] a[n-e].
  std::vector<mpz_class> a(static_cast<std::size_t>(d) + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= d; ++n)
    for (int e = 1; e <= n; ++e) a[n] += m[static_cast<std::size_t>(e)] * a[static_cast<std::size_t>(n - e)];
  // Power sums of log(1/(1-P)): s[n] = sum_e e*m[e]*a[n-e].
  std::vector<mpz_class> s(static_cast<std::size_t>(d) + 1, 0);
  for (int n = 1; n <= d; ++n)
    for (int e = 1; e <= n; ++e) s[n] += e * m[static_cast<std::size_t>(e)] * a[static_cast<std::size_t>(n - e)];
  mpz_class total = 0;
  for (int j = 1; j <= d; ++j) {
    if (d % j != 0) continue;
    total += moebius(j) * s[static_cast<std::size_t>(d / j)];
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), mpz_class(d).get_mpz_t());
  if (r != 0) throw std::logic_error("Witt formula: sum not divisible by degree");
  if (!q.fits_slong_p()) throw std::overflow_error("Witt dimension exceeds long long");
  return q.get_si();
}

}  // namespace liearr
