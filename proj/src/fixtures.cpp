#include "ualg/fixtures.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace ualg::fixtures {

namespace {

Signature ring_signature() {
    return Signature({{"add", 2}, {"neg", 1}, {"zero", 0}, {"mul", 2}});
}

Signature group_signature() { return Signature({{"op", 2}, {"inv", 1}, {"e", 0}}); }

Signature lattice_signature() { return Signature({{"meet", 2}, {"join", 2}}); }

/// Builds a lattice algebra from an order relation given as leq[i*n+j].
FiniteAlgebra lattice_from_order(std::string name, int n, const std::vector<bool>& leq) {
    auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * n + y]; };
    auto bound = [&](int x, int y, bool lower) {
        int found = -1;
        for (int z = 0; z < n; ++z) {
            bool cmp = lower ? le(z, x) && le(z, y) : le(x, z) && le(y, z);
            if (!cmp) continue;
            bool extreme = true;
            for (int w = 0; w < n; ++w) {
                bool wcmp = lower ? le(w, x) && le(w, y) : le(x, w) && le(y, w);
                if (wcmp && !(lower ? le(w, z) : le(z, w))) {
                    extreme = false;
                    break;
                }
            }
            if (extreme) {
                found = z;
                break;
            }
        }
        if (found < 0) throw std::logic_error("order is not a lattice");
        return found;
    };
    std::vector<Element> meet(static_cast<std::size_t>(n) * n), join(meet.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            meet[static_cast<std::size_t>(x) * n + y] = bound(x, y, true);
            join[static_cast<std::size_t>(x) * n + y] = bound(x, y, false);
        }
    return FiniteAlgebra(std::move(name), n, lattice_signature(), {std::move(meet), std::move(join)});
}

} // namespace

FiniteAlgebra zn_ring(int n) {
    std::vector<Element> add(static_cast<std::size_t>(n) * n), mul(add.size()), neg(n);
    for (int a = 0; a < n; ++a) {
        neg[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) {
            add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
            mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
        }
    }
    return FiniteAlgebra("z" + std::to_string(n) + "ring", n, ring_signature(),
                         {std::move(add), std::move(neg), {0}, std::move(mul)});
}

FiniteAlgebra zn_group(int n) {
    std::vector<Element> op(static_cast<std::size_t>(n) * n), inv(n);
    for (int a = 0; a < n; ++a) {
        inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) op[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    return FiniteAlgebra("z" + std::to_string(n) + "group", n, group_signature(),
                         {std::move(op), std::move(inv), {0}});
}

FiniteAlgebra s3_group() {
    // Permutations of {0,1,2} in lexicographic order; composition applies the
    // right factor first.
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto find = [&](const std::array<int, 3>& q) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == q) return i;
        throw std::logic_error("permutation lookup failed");
    };
    std::vector<Element> op(36), inv(6);
    for (int a = 0; a < 6; ++a) {
        std::array<int, 3> ia{};
        for (int x = 0; x < 3; ++x) ia[perms[a][x]] = x;
        inv[a] = find(ia);
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            op[static_cast<std::size_t>(a) * 6 + b] = find(c);
        }
    }
    return FiniteAlgebra("s3group", 6, group_signature(), {std::move(op), std::move(inv), {0}});
}

FiniteAlgebra v4_group() { return direct_product(zn_group(2), zn_group(2)); }

FiniteAlgebra chain_lattice(int n) {
    std::vector<Element> meet(static_cast<std::size_t>(n) * n), join(meet.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            meet[static_cast<std::size_t>(a) * n + b] = std::min(a, b);
            join[static_cast<std::size_t>(a) * n + b] = std::max(a, b);
        }
    return FiniteAlgebra("l" + std::to_string(n) + "chain", n, lattice_signature(),
                         {std::move(meet), std::move(join)});
}

FiniteAlgebra b4_lattice() {
    std::vector<Element> meet(16), join(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            meet[static_cast<std::size_t>(a) * 4 + b] = a & b;
            join[static_cast<std::size_t>(a) * 4 + b] = a | b;
        }
    return FiniteAlgebra("b4lattice", 4, lattice_signature(), {std::move(meet), std::move(join)});
}

FiniteAlgebra n5_lattice() {
    // 0 < 1 < 2 < 4 and 0 < 3 < 4, with 3 incomparable to 1 and 2.
    const int n = 5;
    std::vector<bool> leq(25, false);
    auto set = [&](int x, int y) { leq[static_cast<std::size_t>(x) * n + y] = true; };
    for (int x = 0; x < n; ++x) set(x, x);
    set(0, 1), set(0, 2), set(0, 3), set(0, 4);
    set(1, 2), set(1, 4), set(2, 4), set(3, 4);
    return lattice_from_order("n5lattice", n, leq);
}

FiniteAlgebra m3_lattice() {
    // Three atoms 1,2,3 between bottom 0 and top 4.
    const int n = 5;
    std::vector<bool> leq(25, false);
    auto set = [&](int x, int y) { leq[static_cast<std::size_t>(x) * n + y] = true; };
    for (int x = 0; x < n; ++x) set(x, x);
    for (int a = 1; a <= 3; ++a) set(0, a), set(a, 4);
    set(0, 4);
    return lattice_from_order("m3lattice", n, leq);
}

FiniteAlgebra one_element() {
    return FiniteAlgebra("one", 1, Signature({{"c", 0}}), {{0}});
}

FiniteAlgebra z2z2_ring() { return direct_product(zn_ring(2), zn_ring(2)); }

} // namespace ualg::fixtures
