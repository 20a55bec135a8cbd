#include "popcrit/root_data.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace popcrit {

RootData RootData::make(char kind, int rank) {
    if (rank < 1 || rank > 8) throw std::invalid_argument("rank out of range");
    if ((kind == 'B' || kind == 'C') && rank < 2) throw std::invalid_argument("B/C need rank >= 2");
    if (kind != 'A' && kind != 'B' && kind != 'C') throw std::invalid_argument("unsupported type");
    RootData rd;
    rd.kind = kind;
    rd.rank = rank;
    const int n = rank;
    rd.scalar.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        long self = 2, link = -1;
        if (kind == 'B') {
            self = (i == n - 1) ? 2 : 4;
            link = -2;
        } else if (kind == 'C') {
            self = (i == n - 1) ? 4 : 2;
            link = (i == n - 2) ? -2 : -1;
        }
        rd.scalar[i][i] = self;
        if (i + 1 < n) rd.scalar[i][i + 1] = rd.scalar[i + 1][i] = link;
    }
    rd.sym.resize(n);
    rd.cartan.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        rd.sym[i] = rd.scalar[i][i] / 2;
        for (int j = 0; j < n; ++j) rd.cartan[i][j] = rd.scalar[i][j] / rd.sym[i];
    }
    // Self-check of the pairing convention against the scalar tables.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (rd.scalar[i][j] != rd.scalar[j][i] || rd.sym[i] * rd.cartan[i][j] != rd.scalar[i][j] ||
                (i == j && rd.cartan[i][i] != 2) || (i != j && rd.cartan[i][j] > 0) ||
                ((rd.cartan[i][j] == 0) != (rd.cartan[j][i] == 0)))
                throw std::logic_error("inconsistent root data");
        }
    return rd;
}

RootData RootData::parse(const std::string& code) {
    if (code.size() < 2) throw std::invalid_argument("bad root system code: " + code);
    return make(code[0], std::stoi(code.substr(1)));
}

Weight RootData::root(int i) const {
    Weight r(rank);
    for (int j = 0; j < rank; ++j) r[j] = cartan[j][i];
    return r;
}

long RootData::pair_root_comb(const Weight& lambda, const std::vector<long>& c) const {
    long s = 0;
    for (int i = 0; i < rank; ++i) s += c[i] * sym[i] * lambda[i];
    return s;
}

long RootData::root_norm(const std::vector<long>& c) const {
    long s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) s += c[i] * c[j] * scalar[i][j];
    return s;
}

Weight RootData::minus_roots(const Weight& lambda, const std::vector<long>& l) const {
    Weight r = lambda;
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i) r[j] -= l[i] * cartan[j][i];
    return r;
}

std::size_t RootData::weyl_order() const {
    std::size_t f = 1;
    for (int k = 2; k <= rank + (kind == 'A' ? 1 : 0); ++k) f *= k;
    if (kind != 'A') f <<= rank;
    return f;
}

bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](long v) { return v >= 0; });
}

Weight add(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight sub(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

namespace {
IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size();
    IntMat r(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}
}  // namespace

WeylElement weyl_identity(const RootData& rd) {
    WeylElement e;
    e.matrix.assign(rd.rank, std::vector<long>(rd.rank, 0));
    for (int i = 0; i < rd.rank; ++i) e.matrix[i][i] = 1;
    return e;
}

WeylElement weyl_generator(const RootData& rd, int i) {
    WeylElement e = weyl_identity(rd);
    e.word = {i};
    for (int j = 0; j < rd.rank; ++j) e.matrix[j][i] -= rd.cartan[j][i];
    return e;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    WeylElement r;
    r.word = a.word;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    r.matrix = mat_mul(a.matrix, b.matrix);
    return r;
}

WeylElement weyl_from_word(const RootData& rd, const std::vector<int>& word) {
    WeylElement r = weyl_identity(rd);
    for (int i : word) r = weyl_mul(r, weyl_generator(rd, i));
    return r;
}

Weight act(const WeylElement& w, const Weight& lambda) {
    Weight r(lambda.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[i] += w.matrix[i][j] * lambda[j];
    return r;
}

Weight reflect(const RootData& rd, int i, const Weight& lambda) {
    Weight r = lambda;
    for (int j = 0; j < rd.rank; ++j) r[j] -= lambda[i] * rd.cartan[j][i];
    return r;
}

Weight shifted_action(const RootData& rd, const WeylElement& w, const Weight& lambda) {
    return sub(act(w, add(lambda, rd.rho())), rd.rho());
}

std::variant<Dominant, OnWall> dominant_representative(const RootData& rd, const Weight& lambda) {
    Weight mu = add(lambda, rd.rho());
    std::vector<int> word;
    for (;;) {
        if (std::any_of(mu.begin(), mu.end(), [](long v) { return v == 0; })) return OnWall{};
        int neg = -1;
        for (int i = 0; i < rd.rank; ++i)
            if (mu[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) break;
        mu = reflect(rd, neg, mu);
        word.insert(word.begin(), neg);
    }
    return Dominant{sub(mu, rd.rho()), weyl_from_word(rd, word)};
}

WeylGroup::WeylGroup(const RootData& rd) {
    if (rd.rank > 6) throw std::invalid_argument("Weyl group enumeration capped at rank 6");
    std::vector<WeylElement> gens;
    for (int i = 0; i < rd.rank; ++i) gens.push_back(weyl_generator(rd, i));
    elems_.push_back(weyl_identity(rd));
    index_[elems_[0].matrix] = 0;
    for (std::size_t head = 0; head < elems_.size(); ++head) {
        for (const auto& g : gens) {
            WeylElement e = weyl_mul(g, elems_[head]);
            if (index_.count(e.matrix)) continue;
            index_[e.matrix] = elems_.size();
            elems_.push_back(std::move(e));
        }
    }
}

std::optional<std::size_t> WeylGroup::find(const IntMat& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t WeylGroup::longest() const { return elems_.size() - 1; }

Weight fold_weight_B(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    Weight r(2 * n - 1);
    for (int i = 1; i <= n; ++i) r[i - 1] = r[2 * n - i - 1] = lambda[i - 1];
    return r;
}

Weight fold_weight_C(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    Weight r(2 * n);
    for (int i = 1; i <= n; ++i) r[i - 1] = r[2 * n - i] = lambda[i - 1];
    return r;
}

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

Perm perm_mul(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k] - 1];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) r[p[k] - 1] = static_cast<int>(k) + 1;
    return r;
}

namespace {
Perm transposition(int n, int a, int b) {
    Perm p = perm_identity(n);
    std::swap(p[a - 1], p[b - 1]);
    return p;
}
}  // namespace

Perm folded_weyl_embed(char kind, int rank, const WeylElement& w) {
    if (kind != 'B' && kind != 'C') throw std::invalid_argument("folded embedding needs B or C");
    const int n = rank;
    const int m = kind == 'B' ? 2 * n : 2 * n + 1;
    Perm r = perm_identity(m);
    for (int g : w.word) {
        int i = g + 1;
        Perm img;
        if (i < n)
            img = perm_mul(transposition(m, i, i + 1), transposition(m, m - i, m + 1 - i));
        else
            img = kind == 'B' ? transposition(m, n, n + 1) : transposition(m, n, n + 2);
        r = perm_mul(img, r);
    }
    return r;
}

std::vector<int> folded_weyl_word(char kind, int rank, const std::vector<int>& word) {
    const int n = rank;
    const int m = kind == 'B' ? 2 * n : 2 * n + 1;
    std::vector<int> out;
    for (int g : word) {
        int i = g + 1;
        if (i < n) {
            out.push_back(i - 1);
            out.push_back(m - i - 1);
        } else if (kind == 'B') {
            out.push_back(n - 1);
        } else {
            out.insert(out.end(), {n - 1, n, n - 1});
        }
    }
    return out;
}

bool is_centro_symmetric(const Perm& p) {
    const int m = static_cast<int>(p.size());
    for (int i = 1; i <= m; ++i)
        if (p[i - 1] + p[m - i] != m + 1) return false;
    return true;
}

Perm a_weyl_to_perm(const RootData& rdA, const WeylElement& w) {
    Weight c = act(w, rdA.rho());
    const int m = rdA.rank + 1;
    std::vector<long> f(m, 0);
    for (int i = 1; i < m; ++i) f[i] = f[i - 1] + c[i - 1];
    long lo = *std::min_element(f.begin(), f.end());
    Perm p(m);
    for (int i = 0; i < m; ++i) p[i] = static_cast<int>(f[i] - lo + 1);
    return p;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

}  // namespace popcrit
