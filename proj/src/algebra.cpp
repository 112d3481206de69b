#include "ualg/algebra.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "ualg/errors.hpp"

namespace ualg {

namespace {

std::size_t checked_power(int base, int exp) {
    std::size_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(base))
            throw input_error("operation table too large");
        result *= static_cast<std::size_t>(base);
    }
    return result;
}

} // namespace

Signature::Signature(std::vector<OpSymbol> ops) : ops_(std::move(ops)) {
    std::unordered_set<std::string> seen;
    for (const auto& op : ops_) {
        if (op.arity < 0) throw input_error("negative arity for operation '" + op.name + "'");
        if (!seen.insert(op.name).second)
            throw input_error("duplicate operation name '" + op.name + "'");
    }
}

int Signature::index_of(std::string_view name) const {
    for (int i = 0; i < count(); ++i)
        if (ops_[i].name == name) return i;
    return -1;
}

bool Signature::has_constants() const {
    for (const auto& op : ops_)
        if (op.arity == 0) return true;
    return false;
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig,
                             std::vector<std::vector<Element>> tables)
    : name_(std::move(name)), size_(size), sig_(std::move(sig)), tables_(std::move(tables)) {
    if (size_ <= 0) throw input_error("algebra size must be positive");
    if (tables_.size() != static_cast<std::size_t>(sig_.count()))
        throw input_error("table count does not match signature");
    for (int op = 0; op < sig_.count(); ++op) {
        std::size_t expect = checked_power(size_, sig_.arity(op));
        if (tables_[op].size() != expect)
            throw input_error("table length for '" + sig_.name(op) + "' is " +
                              std::to_string(tables_[op].size()) + ", expected " +
                              std::to_string(expect));
        for (Element v : tables_[op])
            if (v < 0 || v >= size_)
                throw input_error("table entry out of range for '" + sig_.name(op) + "'");
    }
}

Element FiniteAlgebra::apply(int op, std::span<const Element> args) const {
    if (op < 0 || op >= sig_.count()) throw input_error("unknown operation index");
    const int k = sig_.arity(op);
    if (static_cast<int>(args.size()) != k)
        throw input_error("arity mismatch applying '" + sig_.name(op) + "'");
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * static_cast<std::size_t>(size_) + args[i];
    return tables_[op][idx];
}

Term Term::variable(int index) {
    if (index < 0) throw input_error("negative variable index");
    Term t;
    t.var_ = index;
    return t;
}

Term Term::apply(int op, std::vector<Term> children) {
    Term t;
    t.op_ = op;
    t.children_ = std::move(children);
    return t;
}

Element eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const Element> env) {
    if (t.is_variable()) {
        if (t.var_index() >= static_cast<int>(env.size()))
            throw input_error("variable index " + std::to_string(t.var_index()) +
                              " outside environment of size " + std::to_string(env.size()));
        return env[t.var_index()];
    }
    const int op = t.op();
    if (op < 0 || op >= alg.signature().count()) throw input_error("unknown operation symbol");
    if (static_cast<int>(t.children().size()) != alg.signature().arity(op))
        throw input_error("term child count does not match arity of '" +
                          alg.signature().name(op) + "'");
    std::vector<Element> args;
    args.reserve(t.children().size());
    for (const Term& child : t.children()) args.push_back(eval_term(alg, child, env));
    return alg.apply(op, args);
}

std::vector<Element> subalgebra_generate(const FiniteAlgebra& alg, std::span<const Element> seed) {
    const int n = alg.size();
    if (seed.empty() && !alg.signature().has_constants())
        throw input_error("empty seed with a constant-free signature has no subalgebra");
    std::vector<char> in(n, 0);
    std::vector<Element> list;
    auto add = [&](Element x) {
        if (!in[x]) {
            in[x] = 1;
            list.push_back(x);
        }
    };
    for (Element x : seed) {
        if (x < 0 || x >= n) throw input_error("seed element out of range");
        add(x);
    }

    const Signature& sig = alg.signature();
    for (int op = 0; op < sig.count(); ++op)
        if (sig.arity(op) == 0) add(alg.table(op)[0]);

    // Frontier passes: a tuple is processed in the pass where its latest
    // member entered, so each tuple is applied exactly once.
    std::size_t old_count = 0;
    while (old_count < list.size()) {
        std::size_t begin_new = old_count, end = list.size();
        old_count = end;
        for (int op = 0; op < sig.count(); ++op) {
            const int k = sig.arity(op);
            if (k == 0) continue;
            std::vector<std::size_t> pos(k, 0);
            std::vector<Element> args(k);
            while (true) {
                std::size_t maxpos = 0;
                for (std::size_t p : pos) maxpos = std::max(maxpos, p);
                if (maxpos >= begin_new) {
                    for (int i = 0; i < k; ++i) args[i] = list[pos[i]];
                    add(alg.apply(op, args));
                }
                int i = k - 1;
                while (i >= 0 && ++pos[i] == end) pos[i--] = 0;
                if (i < 0) break;
            }
        }
    }
    std::sort(list.begin(), list.end());
    return list;
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (!(a.signature() == b.signature()))
        throw input_error("direct product requires matching signatures");
    const int na = a.size(), nb = b.size(), n = na * nb;
    const Signature& sig = a.signature();
    std::vector<std::vector<Element>> tables(sig.count());
    for (int op = 0; op < sig.count(); ++op) {
        const int k = sig.arity(op);
        std::size_t len = 1;
        for (int i = 0; i < k; ++i) len *= static_cast<std::size_t>(n);
        tables[op].resize(len);
        std::vector<Element> left(k), right(k);
        std::vector<std::size_t> pos(k, 0);
        std::size_t idx = 0;
        while (true) {
            for (int i = 0; i < k; ++i) {
                left[i] = static_cast<Element>(pos[i]) / nb;
                right[i] = static_cast<Element>(pos[i]) % nb;
            }
            tables[op][idx++] = a.apply(op, left) * nb + b.apply(op, right);
            int i = k - 1;
            while (i >= 0 && ++pos[i] == static_cast<std::size_t>(n)) pos[i--] = 0;
            if (i < 0) break;
        }
    }
    return FiniteAlgebra(a.name() + "x" + b.name(), n, sig, std::move(tables));
}

QuotientResult quotient(const FiniteAlgebra& alg, const Congruence& theta) {
    const int n = alg.size();
    if (theta.size() != n) throw input_error("congruence size does not match algebra");

    // Block indices by minimal representative, ascending.
    std::vector<int> block_of(n, -1);
    std::vector<Element> reps;
    for (int x = 0; x < n; ++x) {
        if (theta.rep(x) == x) {
            block_of[x] = static_cast<int>(reps.size());
            reps.push_back(x);
        }
    }
    std::vector<Element> projection(n);
    for (int x = 0; x < n; ++x) projection[x] = block_of[theta.rep(x)];

    const int m = static_cast<int>(reps.size());
    const Signature& sig = alg.signature();
    std::vector<std::vector<Element>> tables(sig.count());
    for (int op = 0; op < sig.count(); ++op) {
        const int k = sig.arity(op);
        std::size_t len = 1;
        for (int i = 0; i < k; ++i) len *= static_cast<std::size_t>(m);
        tables[op].resize(len);
        std::vector<Element> args(k);
        std::vector<std::size_t> pos(k, 0);
        std::size_t idx = 0;
        while (true) {
            for (int i = 0; i < k; ++i) args[i] = reps[pos[i]];
            tables[op][idx++] = projection[alg.apply(op, args)];
            int i = k - 1;
            while (i >= 0 && ++pos[i] == static_cast<std::size_t>(m)) pos[i--] = 0;
            if (i < 0 || k == 0) break;
        }
    }
    QuotientResult out{FiniteAlgebra(alg.name() + "/theta", m, sig, std::move(tables)),
                       std::move(projection)};

    // Well-definedness: representative choice must not matter. A compatible
    // theta guarantees this; anything else is corrupted input.
    for (int op = 0; op < sig.count(); ++op) {
        const int k = sig.arity(op);
        if (k == 0) continue;
        std::vector<Element> args(k), qargs(k);
        std::vector<std::size_t> pos(k, 0);
        while (true) {
            for (int i = 0; i < k; ++i) {
                args[i] = static_cast<Element>(pos[i]);
                qargs[i] = out.projection[args[i]];
            }
            if (out.projection[alg.apply(op, args)] != out.algebra.apply(op, qargs))
                throw input_error("relation is not compatible with operation '" + sig.name(op) +
                                  "'; quotient undefined");
            int i = k - 1;
            while (i >= 0 && ++pos[i] == static_cast<std::size_t>(n)) pos[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

Congruence project_congruence(const QuotientResult& q, const Congruence& zeta) {
    const int m = q.algebra.size();
    UnionFind uf(m);
    for (int x = 0; x < zeta.size(); ++x) uf.unite(q.projection[x], q.projection[zeta.rep(x)]);
    return Congruence::from_union_find(uf);
}

Congruence lift_congruence(const QuotientResult& q, const Congruence& on_quotient) {
    const int n = static_cast<int>(q.projection.size());
    UnionFind uf(n);
    std::vector<int> first(q.algebra.size(), -1);
    for (int x = 0; x < n; ++x) {
        int b = on_quotient.rep(q.projection[x]);
        if (first[b] < 0)
            first[b] = x;
        else
            uf.unite(first[b], x);
    }
    return Congruence::from_union_find(uf);
}

bool MatrixSet::contains(Element p, Element q, Element r, Element s) const {
    std::array<Element, 4> m{p, q, r, s};
    std::size_t code = encode(m);
    auto it = std::lower_bound(members.begin(), members.end(), code,
                               [this](const std::array<Element, 4>& e, std::size_t c) {
                                   return encode(e) < c;
                               });
    return it != members.end() && encode(*it) == code;
}

MatrixSet matrix_algebra(const FiniteAlgebra& alg, const Congruence& alpha,
                         const Congruence& beta) {
    const int n = alg.size();
    if (alpha.size() != n || beta.size() != n)
        throw input_error("congruence size does not match algebra");
    const std::size_t total = static_cast<std::size_t>(n) * n * n * n;

    std::vector<std::uint64_t> seen((total + 63) / 64, 0);
    std::vector<std::array<Element, 4>> list;
    auto encode = [n](Element p, Element q, Element r, Element s) {
        return ((static_cast<std::size_t>(p) * n + q) * n + r) * n + s;
    };
    auto add = [&](Element p, Element q, Element r, Element s) {
        std::size_t code = encode(p, q, r, s);
        if (!(seen[code >> 6] & (1ull << (code & 63)))) {
            seen[code >> 6] |= 1ull << (code & 63);
            list.push_back({p, q, r, s});
        }
    };

    // Generators: alpha-pairs as rows, beta-pairs as columns. The diagonal
    // arises from the reflexive pairs of either congruence.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (alpha.related(a, b)) add(a, a, b, b);
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            if (beta.related(c, d)) add(c, d, c, d);

    const Signature& sig = alg.signature();
    std::size_t old_count = 0;
    std::array<Element, 4> value;
    while (old_count < list.size()) {
        std::size_t begin_new = old_count, end = list.size();
        old_count = end;
        for (int op = 0; op < sig.count(); ++op) {
            const int k = sig.arity(op);
            if (k == 0) {
                Element c = alg.table(op)[0];
                add(c, c, c, c);
                continue;
            }
            std::vector<std::size_t> pos(k, 0);
            std::vector<Element> args(k);
            while (true) {
                std::size_t maxpos = 0;
                for (std::size_t p : pos) maxpos = std::max(maxpos, p);
                if (maxpos >= begin_new) {
                    for (int coord = 0; coord < 4; ++coord) {
                        for (int i = 0; i < k; ++i) args[i] = list[pos[i]][coord];
                        value[coord] = alg.apply(op, args);
                    }
                    add(value[0], value[1], value[2], value[3]);
                }
                int i = k - 1;
                while (i >= 0 && ++pos[i] == end) pos[i--] = 0;
                if (i < 0) break;
            }
        }
    }

    MatrixSet out;
    out.universe = n;
    out.members = std::move(list);
    std::sort(out.members.begin(), out.members.end(),
              [&out](const std::array<Element, 4>& a, const std::array<Element, 4>& b) {
                  return out.encode(a) < out.encode(b);
              });
    return out;
}

} // namespace ualg
