#ifndef SKEWHAD_SCHEME_HPP
#define SKEWHAD_SCHEME_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "skewhad/bitmatrix.hpp"
#include "skewhad/sign_matrix.hpp"

namespace skewhad {

/// Which association-scheme axiom a relation list violates.
enum class AxiomViolation {
    identity_first,         // A_0 is not the identity matrix
    cell_cover,             // some cell covered zero or several times
    transpose_closure,      // some A_i^T is not among the relations
    product_decomposition,  // some A_i*A_j not constant on a relation
};

class axiom_error : public std::runtime_error {
public:
    axiom_error(AxiomViolation kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    AxiomViolation kind() const { return kind_; }

private:
    AxiomViolation kind_;
};

/// Intersection numbers p^k_ij of a verified scheme: A_i * A_j equals
/// sum_k p^k_ij A_k, entrywise in integers.
class IntersectionTable {
public:
    explicit IntersectionTable(int classes)
        : classes_(classes),
          p_(static_cast<std::size_t>(classes + 1) * (classes + 1) * (classes + 1), 0) {}

    int classes() const { return classes_; }

    std::int64_t p(int i, int j, int k) const { return p_[idx(i, j, k)]; }
    std::int64_t& p(int i, int j, int k) { return p_[idx(i, j, k)]; }

    /// p^k_ij == p^k_ji for all triples.
    bool commutative() const;

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * (classes_ + 1) + j) * (classes_ + 1) + k;
    }

    int classes_;
    std::vector<std::int64_t> p_;
};

struct SchemeVerification {
    IntersectionTable table;
    bool symmetric;
    bool commutative;
};

/// Ordered list of relation matrices A_0..A_d on the point set {1..m}.
/// The carrier itself only enforces shape; verify_scheme_axioms decides
/// whether the list is an association scheme.
class AssociationScheme {
public:
    explicit AssociationScheme(std::vector<RelationMatrix> relations);

    int order() const { return order_; }
    int class_count() const { return static_cast<int>(relations_.size()) - 1; }

    const RelationMatrix& relation(int k) const { return relations_[k]; }
    const std::vector<RelationMatrix>& relations() const { return relations_; }

    /// The unique k with (A_k)_ij = 1; throws std::invalid_argument if the
    /// relations do not partition the cells.
    int relation_index_at(Point i, Point j) const;

    /// d == 2, A_1^T == A_2 and A_1 != A_2.
    bool is_nonsymmetric_class2() const;

    bool operator==(const AssociationScheme&) const = default;

private:
    int order_;
    std::vector<RelationMatrix> relations_;
};

/// Checks the four scheme axioms on a relation list and returns the full
/// intersection table together with the symmetry and commutativity
/// flags. Throws axiom_error with a distinct kind per failed axiom.
SchemeVerification verify_scheme_axioms(const std::vector<RelationMatrix>& relations);

/// Strips the first row and column of a normalized skew-Hadamard matrix
/// of order n >= 4 and splits the remaining block as I + A_1 - A_2.
/// The result is a verified non-symmetric class-2 scheme with A_1^T = A_2.
AssociationScheme scheme_from_skew_hadamard(const SignMatrix& h);

/// Doubling at the scheme level: from a non-symmetric class-2 scheme of
/// order m builds the order 2m+1 scheme whose B_1 has block rows
/// ({1..m}, {m+1}, {m+2..2m+1}) equal to [A_1 | 0 | A_0+A_1],
/// [1...1 | 0 | 0...0] and [A_1 | 1 | A_2]. Point m+1 is the center.
AssociationScheme doubled_scheme(const AssociationScheme& x);

/// Distinguished point of a doubled scheme of order 2m+1.
inline Point doubled_center(const AssociationScheme& y) { return (y.order() + 1) / 2; }

/// Verifies the class-2 product identities with exact coefficients
///   A_1^2   = ((m-3)/4) A_1 + ((m+1)/4) A_2
///   A_2^2   = ((m+1)/4) A_1 + ((m-3)/4) A_2
///   A_1 A_2 = A_2 A_1 = ((m-1)/2) A_0 + ((m-3)/4)(A_1 + A_2)
/// plus the minimal-polynomial identity
///   (A_1 - ((m-1)/2) I)(4 A_1^2 + 4 A_1 + (m+1) I) = 0,
/// all entrywise in 64-bit integers. Requires a non-symmetric class-2
/// scheme with m = 3 (mod 4).
bool verify_class2_products(const AssociationScheme& x);

/// Reads the ".asc" text format: line 1 is "m d", then m lines of m
/// relation indices in {0..d}. Only format-level validation; run
/// verify_scheme_axioms to establish the scheme axioms.
AssociationScheme read_scheme(std::istream& in);

/// Writes the exact ".asc" format, the inverse of read_scheme.
void write_scheme(std::ostream& out, const AssociationScheme& x);

AssociationScheme load_scheme(const std::string& path);
void save_scheme(const std::string& path, const AssociationScheme& x);

}  // namespace skewhad

#endif
