#ifndef UALG_PARTITION_HPP
#define UALG_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace ualg {

using Element = int;

/// Union-find over {0..n-1} with path compression.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    /// Returns true if the two classes were distinct before the merge.
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (ra > rb) std::swap(ra, rb);
        parent_[rb] = ra; // keep the smaller element as root
        return true;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

/// Equivalence relation on {0..n-1} in canonical form: rep(x) is the least
/// element of x's block. Equality of relations is equality of rep arrays.
class Congruence {
public:
    Congruence() = default;

    /// Canonical form is validated: rep[rep[x]] == rep[x] and rep[x] <= x.
    explicit Congruence(std::vector<Element> rep);

    static Congruence identity(int n); // delta: all blocks singletons
    static Congruence full(int n);     // nabla: one block

    static Congruence from_union_find(UnionFind& uf);

    int size() const { return static_cast<int>(rep_.size()); }
    Element rep(Element x) const { return rep_[x]; }
    bool related(Element x, Element y) const { return rep_[x] == rep_[y]; }

    bool is_identity() const;
    bool is_full() const;

    /// Blocks ordered by their minimal element, elements ascending.
    std::vector<std::vector<Element>> blocks() const;
    int block_count() const;

    /// All related pairs (a,b) with a < b.
    std::vector<std::pair<Element, Element>> pairs() const;

    const std::vector<Element>& data() const { return rep_; }

    bool operator==(const Congruence&) const = default;
    auto operator<=>(const Congruence&) const = default; // lexicographic, canonical order

private:
    std::vector<Element> rep_;
};

/// Blockwise intersection.
Congruence pmeet(const Congruence& p, const Congruence& q);

/// Transitive closure of the union.
Congruence pjoin(const Congruence& p, const Congruence& q);

/// Every p-block contained in a q-block.
bool pleq(const Congruence& p, const Congruence& q);

} // namespace ualg

#endif
