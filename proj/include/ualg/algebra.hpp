#ifndef UALG_ALGEBRA_HPP
#define UALG_ALGEBRA_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/partition.hpp"

namespace ualg {

struct OpSymbol {
    std::string name;
    int arity = 0;
    bool operator==(const OpSymbol&) const = default;
};

/// Ordered list of operation symbols; names unique, arities >= 0.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<OpSymbol> ops);

    const std::vector<OpSymbol>& ops() const { return ops_; }
    int count() const { return static_cast<int>(ops_.size()); }
    int arity(int op) const { return ops_[op].arity; }
    const std::string& name(int op) const { return ops_[op].name; }
    int index_of(std::string_view name) const; // -1 if absent
    bool has_constants() const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<OpSymbol> ops_;
};

/// Finite algebra on universe {0..n-1}. Each operation of arity k is a total
/// table of length n^k, row-major in lexicographic argument order (leftmost
/// argument slowest). The layout is part of the file-format contract.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default; // one-element algebra with no operations
    FiniteAlgebra(std::string name, int size, Signature sig,
                  std::vector<std::vector<Element>> tables);

    const std::string& name() const { return name_; }
    int size() const { return size_; }
    const Signature& signature() const { return sig_; }
    const std::vector<Element>& table(int op) const { return tables_[op]; }

    Element apply(int op, std::span<const Element> args) const;

    bool operator==(const FiniteAlgebra& other) const {
        return size_ == other.size_ && sig_ == other.sig_ && tables_ == other.tables_;
    }

private:
    std::string name_;
    int size_ = 1;
    Signature sig_;
    std::vector<std::vector<Element>> tables_;
};

/// Term tree over a signature: either a variable index or an operation node
/// whose child count equals the operation's arity.
class Term {
public:
    static Term variable(int index);
    static Term apply(int op, std::vector<Term> children);

    bool is_variable() const { return op_ < 0; }
    int var_index() const { return var_; }
    int op() const { return op_; }
    const std::vector<Term>& children() const { return children_; }

private:
    int var_ = -1;
    int op_ = -1;
    std::vector<Term> children_;
};

/// Recursive table-lookup evaluation. env must cover every variable in t.
Element eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const Element> env);

/// Least subset containing the seed and all constants, closed under every
/// operation. Errors if the seed is empty and the signature has no constants.
std::vector<Element> subalgebra_generate(const FiniteAlgebra& alg, std::span<const Element> seed);

/// Direct product with coordinatewise operations; element (a,b) is encoded
/// as a * b_size + b. Both factors must share the signature.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct QuotientResult {
    FiniteAlgebra algebra;            // universe = blocks, indexed by minimal representative order
    std::vector<Element> projection;  // element of the parent -> block index
};

/// Quotient by a congruence; validates compatibility and well-definedness.
QuotientResult quotient(const FiniteAlgebra& alg, const Congruence& theta);

/// Project a congruence zeta >= theta of the parent onto the quotient.
Congruence project_congruence(const QuotientResult& q, const Congruence& zeta);

/// Pull a congruence of the quotient back to the parent.
Congruence lift_congruence(const QuotientResult& q, const Congruence& on_quotient);

/// Subalgebra of alg^4 generated by {(a,a,b,b) : (a,b) in alpha} and
/// {(c,d,c,d) : (c,d) in beta} under coordinatewise operations. Its members
/// are exactly the value quadruples of terms split across alpha-rows and
/// beta-columns, which is what the term condition quantifies over.
struct MatrixSet {
    int universe = 0;
    std::vector<std::array<Element, 4>> members; // sorted by encoded index

    std::size_t encode(const std::array<Element, 4>& m) const {
        std::size_t n = static_cast<std::size_t>(universe);
        return ((static_cast<std::size_t>(m[0]) * n + m[1]) * n + m[2]) * n + m[3];
    }
    bool contains(Element p, Element q, Element r, Element s) const;
};

MatrixSet matrix_algebra(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta);

} // namespace ualg

#endif
