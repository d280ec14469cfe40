#include "lsiso/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "lsiso/errors.hpp"

namespace lsiso {

Permutation::Permutation(int d) : img_(d) {
  if (d < 1 || d > kMaxDegree) throw DomainError("degree out of range: " + std::to_string(d));
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int d = static_cast<int>(images.size());
  Permutation p(d);
  std::vector<bool> seen(d, false);
  for (int i = 0; i < d; ++i) {
    int v = images[i];
    if (v < 1 || v > d || seen[v - 1]) throw DomainError("images do not form a bijection");
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (auto v : img_) k = (k << 4) | v;
  return k;
}

std::string Permutation::str() const {
  const int d = degree();
  std::string out;
  std::vector<bool> seen(d, false);
  const bool wide = d > 9;
  for (int i = 0; i < d; ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (wide && !first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "(1)" : out;
}

Permutation parse_cycles(const std::string& text, int d) {
  Permutation p(d);
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(d, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle text: " + text);
    ++pos;
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parentheses: " + text);
    std::string body = text.substr(pos, close - pos);
    if (body.find('(') != std::string::npos) throw ParseError("nested parentheses: " + text);
    pos = close + 1;
    std::vector<int> cyc;
    bool separated = body.find_first_of(" ,\t") != std::string::npos;
    if (!separated && d <= 9) {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad character in cycle: " + text);
        cyc.push_back(c - '0');
      }
    } else {
      std::string tok;
      auto flush = [&] {
        if (tok.empty()) return;
        for (char c : tok)
          if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad token in cycle: " + tok);
        cyc.push_back(std::stoi(tok));
        tok.clear();
      };
      for (char c : body) {
        if (c == ' ' || c == ',' || c == '\t') flush();
        else tok += c;
      }
      flush();
    }
    if (cyc.empty()) throw ParseError("empty cycle: " + text);
    for (int v : cyc) {
      if (v < 1 || v > d) throw ParseError("point out of range: " + std::to_string(v));
      if (used[v - 1]) throw ParseError("repeated point: " + std::to_string(v));
      used[v - 1] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
  }
  std::vector<int> one(d);
  for (int i = 0; i < d; ++i) one[i] = img[i] + 1;
  return Permutation::from_images(one);
}

static void check_same(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch");
}

Permutation compose(const Permutation& a, const Permutation& b) {
  check_same(a, b);
  std::vector<int> img(a.degree());
  for (int i = 1; i <= a.degree(); ++i) img[i - 1] = a(b(i));
  return Permutation::from_images(img);
}

Permutation inverse(const Permutation& a) {
  std::vector<int> img(a.degree());
  for (int i = 1; i <= a.degree(); ++i) img[a(i) - 1] = i;
  return Permutation::from_images(img);
}

int apply(const Permutation& a, int point) {
  if (point < 1 || point > a.degree()) throw DomainError("point out of range");
  return a(point);
}

CycleType cycle_type(const Permutation& s) {
  const int d = s.degree();
  std::vector<int> lens;
  std::vector<bool> seen(d, false);
  for (int i = 0; i < d; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = s.raw()[j]) seen[j] = true, ++len;
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  CycleType ct;
  ct.counts.assign(d, 0);
  for (int l : lens) ++ct.counts[l - 1];
  ct.partition = Partition(lens, d);
  return ct;
}

int order(const Permutation& a) {
  int n = 1;
  for (int k : cycle_type(a).partition.nonzero()) n = std::lcm(n, k);
  return n;
}

int sign_exponent(const Permutation& a) {
  auto p = cycle_type(a).partition;
  return (a.degree() - p.length()) % 2;
}

// ---------------------------------------------------------------------------

struct PermGroup::Data {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<std::uint64_t, long> index;
  std::vector<ConjugacyClass> classes;
};

int PermGroup::degree() const { return data_->degree; }
std::size_t PermGroup::order() const { return data_->elements.size(); }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }
const std::vector<Permutation>& PermGroup::elements() const { return data_->elements; }
const std::vector<ConjugacyClass>& PermGroup::classes() const { return data_->classes; }

long PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree()) return -1;
  auto it = data_->index.find(p.key());
  return it == data_->index.end() ? -1 : it->second;
}

bool PermGroup::contains(const Permutation& p) const { return index_of(p) >= 0; }

static std::vector<ConjugacyClass> compute_classes(const std::vector<Permutation>& elems,
                                                   const std::vector<Permutation>& gens,
                                                   const std::unordered_map<std::uint64_t, long>& index) {
  std::vector<long> cls(elems.size(), -1);
  std::vector<ConjugacyClass> out;
  std::vector<Permutation> ginv;
  for (auto& g : gens) ginv.push_back(inverse(g));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cls[i] >= 0) continue;
    ConjugacyClass c;
    c.representative = elems[i];
    c.cycle_type = cycle_type(elems[i]);
    std::vector<long> members{static_cast<long>(i)};
    cls[i] = static_cast<long>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Permutation& x = elems[members[k]];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        long j = index.at(compose(compose(gens[g], x), ginv[g]).key());
        if (cls[j] < 0) {
          cls[j] = cls[i];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    for (long m : members) c.members.push_back(elems[m]);
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    auto pa = a.cycle_type.partition.nonzero(), pb = b.cycle_type.partition.nonzero();
    if (pa != pb) return pa < pb;
    return a.representative < b.representative;
  });
  return out;
}

PermGroup generate(const std::vector<Permutation>& generators, int d, std::size_t cap) {
  for (auto& g : generators)
    if (g.degree() != d) throw DomainError("generator degree mismatch");
  auto data = std::make_shared<PermGroup::Data>();
  data->degree = d;
  data->generators = generators;
  Permutation id(d);
  std::unordered_map<std::uint64_t, long> seen;
  std::vector<Permutation> elems{id};
  seen.emplace(id.key(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (auto& g : generators) {
      Permutation x = compose(g, elems[k]);
      if (seen.emplace(x.key(), 0).second) {
        elems.push_back(std::move(x));
        if (elems.size() > cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) + " elements");
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) data->index[elems[i].key()] = static_cast<long>(i);
  data->elements = std::move(elems);
  data->classes = compute_classes(data->elements, generators, data->index);
  PermGroup G;
  G.data_ = std::move(data);
  return G;
}

PermGroup symmetric_group(int d) { return young_subgroup(Partition({d}, d), d); }

PermGroup trivial_group(int d) { return generate({}, d); }

const std::vector<ConjugacyClass>& conjugacy_classes(const PermGroup& W) { return W.classes(); }

std::vector<Permutation> elements_of_cycle_type(const PermGroup& W, const Partition& alpha) {
  std::vector<Permutation> out;
  for (auto& c : W.classes())
    if (c.cycle_type.partition == alpha)
      out.insert(out.end(), c.members.begin(), c.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup young_subgroup(const Partition& lambda, int d) {
  if (lambda.d() != d) throw DomainError("partition is not of the given degree");
  std::vector<Permutation> gens;
  int start = 1;
  for (int part : lambda.nonzero()) {
    if (part >= 2) {
      std::vector<int> img(d);
      std::iota(img.begin(), img.end(), 1);
      for (int k = 0; k < part; ++k) img[start - 1 + k] = start + (k + 1) % part;
      gens.push_back(Permutation::from_images(img));
      if (part >= 3) {
        std::iota(img.begin(), img.end(), 1);
        std::swap(img[start - 1], img[start]);
        gens.push_back(Permutation::from_images(img));
      }
    }
    start += part;
  }
  return generate(gens, d);
}

bool is_subgroup(const PermGroup& H, const PermGroup& W) {
  if (H.degree() != W.degree()) return false;
  for (auto& h : H.elements())
    if (!W.contains(h)) return false;
  return true;
}

PermGroup conjugate(const PermGroup& W, const Permutation& s) {
  Permutation si = inverse(s);
  std::vector<Permutation> gens;
  for (auto& g : W.generators()) gens.push_back(compose(compose(s, g), si));
  return generate(gens, W.degree());
}

// ---------------------------------------------------------------------------

OneDimCharacter::OneDimCharacter(PermGroup group, int n, std::vector<int> exponents)
    : group_(std::move(group)), n_(n), exps_(std::move(exponents)) {
  if (n_ < 1) throw DomainError("character order must be positive");
  if (exps_.size() != group_.order()) throw DomainError("exponent table size mismatch");
  for (int& e : exps_) e = ((e % n_) + n_) % n_;
}

int OneDimCharacter::exponent(const Permutation& s) const {
  long i = group_.index_of(s);
  if (i < 0) throw DomainError("element outside the character's group: " + s.str());
  return exps_[i];
}

std::vector<Permutation> OneDimCharacter::kernel() const {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] == 0) out.push_back(group_.elements()[i]);
  return out;
}

OneDimCharacter unit_character(const PermGroup& W) {
  return OneDimCharacter(W, 1, std::vector<int>(W.order(), 0));
}

// Greedy subset of the generators that still generates W.
static std::vector<Permutation> minimal_generators(const PermGroup& W) {
  std::vector<Permutation> gens;
  std::size_t have = 1;
  for (auto& g : W.generators()) {
    if (have == W.order()) break;
    auto trial = gens;
    trial.push_back(g);
    std::size_t n = generate(trial, W.degree()).order();
    if (n > have) {
      gens = std::move(trial);
      have = n;
    }
  }
  return gens;
}

std::vector<OneDimCharacter> one_dim_characters(const PermGroup& W) {
  const auto gens = minimal_generators(W);
  const std::size_t k = gens.size();
  int N = 1;
  std::vector<int> ord(k);
  for (std::size_t i = 0; i < k; ++i) {
    ord[i] = order(gens[i]);
    N = std::lcm(N, ord[i]);
  }
  // Cayley-graph BFS tree over the chosen generators.
  const auto& elems = W.elements();
  std::vector<long> parent(elems.size(), -2), via(elems.size(), -1);
  std::vector<long> bfs;
  long id = W.index_of(Permutation(W.degree()));
  parent[id] = -1;
  bfs.push_back(id);
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    for (std::size_t g = 0; g < k; ++g) {
      long j = W.index_of(compose(gens[g], elems[bfs[q]]));
      if (parent[j] == -2) {
        parent[j] = bfs[q];
        via[j] = static_cast<long>(g);
        bfs.push_back(j);
      }
    }
  }
  // Multiplication by each generator, as an index table.
  std::vector<std::vector<long>> mult(k, std::vector<long>(elems.size()));
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t x = 0; x < elems.size(); ++x) mult[g][x] = W.index_of(compose(gens[g], elems[x]));

  std::vector<OneDimCharacter> out;
  std::vector<int> a(k, 0);  // exponents of generators, in units of N/ord
  while (true) {
    std::vector<int> e(elems.size(), 0);
    for (long x : bfs)
      if (parent[x] >= 0) e[x] = (e[parent[x]] + a[via[x]] * (N / ord[via[x]])) % N;
    bool ok = true;
    for (std::size_t g = 0; g < k && ok; ++g)
      for (std::size_t x = 0; x < elems.size() && ok; ++x)
        if (e[mult[g][x]] != (e[x] + a[g] * (N / ord[g])) % N) ok = false;
    if (ok) {
      int gcd = N;
      for (int v : e) gcd = std::gcd(gcd, v);
      int n = N / gcd;
      for (int& v : e) v /= gcd;
      out.emplace_back(W, n, std::move(e));
    }
    std::size_t i = 0;
    while (i < k && ++a[i] == ord[i]) a[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end(), [](const OneDimCharacter& x, const OneDimCharacter& y) {
    if (x.is_unit() != y.is_unit()) return x.is_unit();
    std::vector<long> fx, fy;  // compare values as fractions of a full turn
    for (int v : x.exponents()) fx.push_back(static_cast<long>(v) * y.order());
    for (int v : y.exponents()) fy.push_back(static_cast<long>(v) * x.order());
    return fx < fy;
  });
  return out;
}

int sign_product_exponent(const Partition& lambda, const std::vector<bool>& mask,
                          const Permutation& eta) {
  const auto parts = lambda.nonzero();
  if (mask.size() != parts.size()) throw DomainError("theta mask length must equal the number of parts");
  int e = 0, start = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int end = start + parts[k];
    if (mask[k]) {
      std::vector<bool> seen(parts[k], false);
      for (int i = start; i < end; ++i) {
        if (seen[i - start]) continue;
        int len = 0;
        for (int j = i; !seen[j - start]; j = eta.raw()[j]) {
          if (j < start || j >= end) throw DomainError("element does not preserve the blocks");
          seen[j - start] = true;
          ++len;
        }
        e += len - 1;
      }
    }
    start = end;
  }
  return e % 2;
}

OneDimCharacter sign_product_character(const Partition& lambda, const std::vector<bool>& mask) {
  if (mask.size() != static_cast<std::size_t>(lambda.length()))
    throw DomainError("theta mask length must equal the number of parts");
  PermGroup S = young_subgroup(lambda, lambda.d());
  std::vector<int> e;
  e.reserve(S.order());
  bool any = false;
  for (auto& s : S.elements()) {
    e.push_back(sign_product_exponent(lambda, mask, s));
    any = any || e.back();
  }
  return OneDimCharacter(S, any ? 2 : 1, std::move(e));
}

OneDimCharacter chi_e(const PermGroup& Gprime, const PermGroup& G) {
  if (!is_subgroup(G, Gprime)) throw DomainError("G is not a subgroup of G'");
  if (Gprime.order() != 2 * G.order()) throw DomainError("index of G in G' is not 2");
  std::vector<int> e;
  for (auto& s : Gprime.elements()) e.push_back(G.contains(s) ? 0 : 1);
  return OneDimCharacter(Gprime, 2, std::move(e));
}

}  // namespace lsiso
