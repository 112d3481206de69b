#include "ualg/partition.hpp"

#include <algorithm>

#include "ualg/errors.hpp"

namespace ualg {

Congruence::Congruence(std::vector<Element> rep) : rep_(std::move(rep)) {
    const int n = static_cast<int>(rep_.size());
    for (int x = 0; x < n; ++x) {
        if (rep_[x] < 0 || rep_[x] > x || rep_[rep_[x]] != rep_[x])
            throw input_error("congruence rep array is not in canonical form");
    }
}

Congruence Congruence::identity(int n) {
    std::vector<Element> rep(n);
    for (int i = 0; i < n; ++i) rep[i] = i;
    return Congruence(std::move(rep));
}

Congruence Congruence::full(int n) {
    return Congruence(std::vector<Element>(n, 0));
}

Congruence Congruence::from_union_find(UnionFind& uf) {
    const int n = uf.size();
    std::vector<Element> least(n, -1), rep(n);
    for (int x = 0; x < n; ++x) {
        int r = uf.find(x);
        if (least[r] < 0) least[r] = x; // ascending scan: first hit is the minimum
        rep[x] = least[r];
    }
    return Congruence(std::move(rep));
}

bool Congruence::is_identity() const {
    for (int x = 0; x < size(); ++x)
        if (rep_[x] != x) return false;
    return true;
}

bool Congruence::is_full() const {
    for (Element r : rep_)
        if (r != 0) return false;
    return !rep_.empty();
}

std::vector<std::vector<Element>> Congruence::blocks() const {
    std::vector<std::vector<Element>> out;
    std::vector<int> slot(rep_.size(), -1);
    for (int x = 0; x < size(); ++x) {
        int r = rep_[x];
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(x);
    }
    return out;
}

int Congruence::block_count() const {
    int count = 0;
    for (int x = 0; x < size(); ++x)
        if (rep_[x] == x) ++count;
    return count;
}

std::vector<std::pair<Element, Element>> Congruence::pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (rep_[a] == rep_[b]) out.emplace_back(a, b);
    return out;
}

namespace {
void require_same_size(const Congruence& p, const Congruence& q) {
    if (p.size() != q.size()) throw input_error("partition size mismatch");
}
} // namespace

Congruence pmeet(const Congruence& p, const Congruence& q) {
    require_same_size(p, q);
    const int n = p.size();
    // Blocks of the meet are keyed by the (p-rep, q-rep) pair.
    std::vector<Element> rep(n);
    std::vector<int> first(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) {
        std::size_t key = static_cast<std::size_t>(p.rep(x)) * n + q.rep(x);
        if (first[key] < 0) first[key] = x;
        rep[x] = first[key];
    }
    return Congruence(std::move(rep));
}

Congruence pjoin(const Congruence& p, const Congruence& q) {
    require_same_size(p, q);
    UnionFind uf(p.size());
    for (int x = 0; x < p.size(); ++x) {
        uf.unite(x, p.rep(x));
        uf.unite(x, q.rep(x));
    }
    return Congruence::from_union_find(uf);
}

bool pleq(const Congruence& p, const Congruence& q) {
    require_same_size(p, q);
    for (int x = 0; x < p.size(); ++x)
        if (q.rep(x) != q.rep(p.rep(x))) return false;
    return true;
}

} // namespace ualg
