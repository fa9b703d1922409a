#include "skewhad/scheme.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "skewhad/hadamard.hpp"

namespace skewhad {

bool IntersectionTable::commutative() const {
    for (int i = 0; i <= classes_; ++i)
        for (int j = 0; j <= classes_; ++j)
            for (int k = 0; k <= classes_; ++k)
                if (p(i, j, k) != p(j, i, k)) return false;
    return true;
}

AssociationScheme::AssociationScheme(std::vector<RelationMatrix> relations)
    : order_(0), relations_(std::move(relations)) {
    if (relations_.empty()) throw std::invalid_argument("scheme: empty relation list");
    order_ = relations_[0].order();
    for (const auto& r : relations_)
        if (r.order() != order_) throw std::invalid_argument("scheme: relations have unequal orders");
}

int AssociationScheme::relation_index_at(Point i, Point j) const {
    int found = -1;
    for (int k = 0; k <= class_count(); ++k) {
        if (relations_[k].get(i, j)) {
            if (found >= 0) throw std::invalid_argument("scheme: cell covered twice");
            found = k;
        }
    }
    if (found < 0) throw std::invalid_argument("scheme: cell not covered");
    return found;
}

bool AssociationScheme::is_nonsymmetric_class2() const {
    return class_count() == 2 && relations_[1].transposed() == relations_[2] &&
           relations_[1] != relations_[2];
}

SchemeVerification verify_scheme_axioms(const std::vector<RelationMatrix>& relations) {
    if (relations.empty()) throw std::invalid_argument("verify_scheme_axioms: empty relation list");
    const int m = relations[0].order();
    const int d = static_cast<int>(relations.size()) - 1;
    for (const auto& r : relations) {
        if (r.order() != m) throw std::invalid_argument("verify_scheme_axioms: relations have unequal orders");
        if (r.ones_count() == 0) throw std::invalid_argument("verify_scheme_axioms: empty relation matrix");
    }

    // (1) A_0 = I
    if (!relations[0].is_identity())
        throw axiom_error(AxiomViolation::identity_first, "A0 is not the identity matrix");

    // (2) the supports partition the cells; remember which relation owns each cell
    std::vector<int> owner(static_cast<std::size_t>(m) * m, -1);
    for (int k = 0; k <= d; ++k) {
        for (Point i = 1; i <= m; ++i) {
            for (Point j = 1; j <= m; ++j) {
                if (!relations[k].get(i, j)) continue;
                auto& slot = owner[static_cast<std::size_t>(i - 1) * m + (j - 1)];
                if (slot >= 0)
                    throw axiom_error(AxiomViolation::cell_cover,
                                      "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") covered by relations " + std::to_string(slot) + " and " +
                                          std::to_string(k));
                slot = k;
            }
        }
    }
    for (std::size_t c = 0; c < owner.size(); ++c) {
        if (owner[c] < 0)
            throw axiom_error(AxiomViolation::cell_cover,
                              "cell (" + std::to_string(c / m + 1) + "," + std::to_string(c % m + 1) +
                                  ") not covered by any relation");
    }

    // (3) closure under transpose
    std::vector<int> transpose_of(d + 1, -1);
    std::vector<RelationMatrix> transposed;
    transposed.reserve(d + 1);
    for (int k = 0; k <= d; ++k) transposed.push_back(relations[k].transposed());
    for (int k = 0; k <= d; ++k) {
        for (int l = 0; l <= d; ++l) {
            if (transposed[k] == relations[l]) { transpose_of[k] = l; break; }
        }
        if (transpose_of[k] < 0)
            throw axiom_error(AxiomViolation::transpose_closure,
                              "transpose of relation " + std::to_string(k) + " is not among the relations");
    }

    // (4) every product decomposes with constant coefficients; each p^k_ij is
    // read off one support cell of A_k and checked against all the others
    IntersectionTable table(d);
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
            std::vector<std::int64_t> coeff(d + 1, -1);
            for (Point x = 1; x <= m; ++x) {
                for (Point y = 1; y <= m; ++y) {
                    const int value = BitRow::and_count(relations[i].row(x), transposed[j].row(y));
                    const int k = owner[static_cast<std::size_t>(x - 1) * m + (y - 1)];
                    if (coeff[k] < 0) {
                        coeff[k] = value;
                    } else if (coeff[k] != value) {
                        throw axiom_error(AxiomViolation::product_decomposition,
                                          "product A" + std::to_string(i) + "*A" + std::to_string(j) +
                                              " is not constant on relation " + std::to_string(k));
                    }
                }
            }
            for (int k = 0; k <= d; ++k) table.p(i, j, k) = coeff[k] < 0 ? 0 : coeff[k];
        }
    }

    bool symmetric = true;
    for (int k = 1; k <= d; ++k)
        if (transpose_of[k] != k) symmetric = false;

    const bool commutative = table.commutative();
    return SchemeVerification{std::move(table), symmetric, commutative};
}

AssociationScheme scheme_from_skew_hadamard(const SignMatrix& h) {
    if (!is_skew_hadamard(h)) throw std::invalid_argument("scheme extraction: input is not skew-Hadamard");
    if (!is_normalized(h)) throw std::invalid_argument("scheme extraction: input is not normalized");
    const int n = h.order();
    if (n < 4) throw std::invalid_argument("scheme extraction: order must be at least 4");

    // Strip row 1 and column 1; the core is I + A_1 - A_2.
    const int m = n - 1;
    RelationMatrix a0 = RelationMatrix::identity(m);
    RelationMatrix a1(m), a2(m);
    for (Point i = 1; i <= m; ++i) {
        for (Point j = 1; j <= m; ++j) {
            if (i == j) continue;
            if (h.at(i + 1, j + 1) > 0) a1.set(i, j);
            else a2.set(i, j);
        }
    }

    AssociationScheme x({std::move(a0), std::move(a1), std::move(a2)});
    if (x.relation(1).transposed() != x.relation(2))
        throw std::logic_error("scheme extraction: A1^T != A2 on skew-Hadamard input");
    try {
        verify_scheme_axioms(x.relations());
    } catch (const axiom_error& e) {
        throw std::logic_error(std::string("scheme extraction: axiom check failed internally: ") + e.what());
    }
    return x;
}

AssociationScheme doubled_scheme(const AssociationScheme& x) {
    if (x.class_count() != 2)
        throw std::invalid_argument("doubled_scheme: input must have class 2");
    if (!x.is_nonsymmetric_class2())
        throw std::invalid_argument("doubled_scheme: input must be non-symmetric with A1^T = A2");
    try {
        verify_scheme_axioms(x.relations());
    } catch (const axiom_error& e) {
        throw std::invalid_argument(std::string("doubled_scheme: input is not an association scheme: ") + e.what());
    }

    const int m = x.order();
    if (2 * m + 1 > kMaxOrder)
        throw std::invalid_argument("doubled_scheme: result order exceeds " + std::to_string(kMaxOrder));
    const int big = 2 * m + 1;
    const Point center = m + 1;
    const RelationMatrix& a1 = x.relation(1);
    const RelationMatrix& a2 = x.relation(2);

    // Block rows ({1..m}, {m+1}, {m+2..2m+1}):
    //   [ A_1    | 0 | A_0+A_1 ]
    //   [ 1...1  | 0 | 0...0   ]
    //   [ A_1    | 1 | A_2     ]
    RelationMatrix b1(big);
    for (Point i = 1; i <= m; ++i) {
        for (Point j = 1; j <= m; ++j) {
            if (a1.get(i, j)) b1.set(i, j);
            if (i == j || a1.get(i, j)) b1.set(i, center + j);
        }
    }
    for (Point j = 1; j <= m; ++j) b1.set(center, j);
    for (Point a = 1; a <= m; ++a) {
        b1.set(center + a, center);
        for (Point j = 1; j <= m; ++j) {
            if (a1.get(a, j)) b1.set(center + a, j);
            if (a2.get(a, j)) b1.set(center + a, center + j);
        }
    }

    RelationMatrix b2 = b1.transposed();
    AssociationScheme y({RelationMatrix::identity(big), std::move(b1), std::move(b2)});
    try {
        verify_scheme_axioms(y.relations());
    } catch (const axiom_error& e) {
        throw std::logic_error(std::string("doubled_scheme: axiom check failed internally: ") + e.what());
    }
    return y;
}

namespace {

// (A_i A_j)_xy computed from the bit rows; transposed_j holds A_j^T.
int product_cell(const RelationMatrix& ai, const RelationMatrix& ajt, Point x, Point y) {
    return BitRow::and_count(ai.row(x), ajt.row(y));
}

bool product_equals(const RelationMatrix& ai, const RelationMatrix& ajt,
                    std::int64_t c0, const RelationMatrix& a1f, std::int64_t c1,
                    const RelationMatrix& a2f, std::int64_t c2) {
    const int m = ai.order();
    for (Point x = 1; x <= m; ++x) {
        for (Point y = 1; y <= m; ++y) {
            const std::int64_t expected =
                c0 * (x == y ? 1 : 0) + c1 * (a1f.get(x, y) ? 1 : 0) + c2 * (a2f.get(x, y) ? 1 : 0);
            if (product_cell(ai, ajt, x, y) != expected) return false;
        }
    }
    return true;
}

}  // namespace

bool verify_class2_products(const AssociationScheme& x) {
    const int m = x.order();
    if (x.class_count() != 2)
        throw std::invalid_argument("class2 products: scheme must have class 2");
    if (!x.is_nonsymmetric_class2())
        throw std::invalid_argument("class2 products: scheme must be non-symmetric with A1^T = A2");
    if (m % 4 != 3)
        throw std::invalid_argument("class2 products: order must be 3 (mod 4)");

    const RelationMatrix& a1 = x.relation(1);
    const RelationMatrix& a2 = x.relation(2);
    const RelationMatrix a1t = a1.transposed();  // equals a2, kept separate on purpose
    const RelationMatrix a2t = a2.transposed();

    const std::int64_t c1 = (m - 3) / 4;
    const std::int64_t c2 = (m + 1) / 4;
    const std::int64_t c0 = (m - 1) / 2;

    bool ok = product_equals(a1, a1t, 0, a1, c1, a2, c2);        // A1^2
    ok = product_equals(a2, a2t, 0, a1, c2, a2, c1) && ok;       // A2^2
    ok = product_equals(a1, a2t, c0, a1, c1, a2, c1) && ok;      // A1*A2
    ok = product_equals(a2, a1t, c0, a1, c1, a2, c1) && ok;      // A2*A1

    // (A_1 - ((m-1)/2) I)(4 A_1^2 + 4 A_1 + (m+1) I) = 0: the exact integer
    // form of the eigenvalue statement for A_1.
    std::vector<std::int64_t> q(static_cast<std::size_t>(m) * m);
    for (Point xr = 1; xr <= m; ++xr)
        for (Point y = 1; y <= m; ++y)
            q[static_cast<std::size_t>(xr - 1) * m + (y - 1)] =
                4 * product_cell(a1, a1t, xr, y) + 4 * (a1.get(xr, y) ? 1 : 0) + (xr == y ? m + 1 : 0);
    for (Point xr = 1; xr <= m && ok; ++xr) {
        for (Point y = 1; y <= m && ok; ++y) {
            std::int64_t cell = 0;
            for (Point z = 1; z <= m; ++z) {
                const std::int64_t left = (a1.get(xr, z) ? 1 : 0) - (xr == z ? c0 : 0);
                if (left != 0) cell += left * q[static_cast<std::size_t>(z - 1) * m + (y - 1)];
            }
            if (cell != 0) ok = false;
        }
    }
    return ok;
}

AssociationScheme read_scheme(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("asc: missing header line");
    std::istringstream head(line);
    long long m = 0, d = 0;
    std::string extra;
    if (!(head >> m >> d) || (head >> extra))
        throw parse_error("asc: header must be 'm d'");
    if (m < 1 || m > kMaxOrder) throw parse_error("asc: order out of range");
    if (d < 0 || d > m * m) throw parse_error("asc: class count out of range");
    // (d+1) bit matrices of m rows; cap the total allocation the header can demand.
    const long long words_needed = (d + 1) * m * ((m + 63) / 64);
    if (words_needed > (1LL << 25))
        throw parse_error("asc: header demands an unreasonably large relation list");

    std::vector<RelationMatrix> rels(d + 1, RelationMatrix(static_cast<int>(m)));
    for (Point i = 1; i <= m; ++i) {
        if (!std::getline(in, line)) throw parse_error("asc: missing row " + std::to_string(i));
        std::istringstream row(line);
        for (Point j = 1; j <= m; ++j) {
            long long k = -1;
            if (!(row >> k)) throw parse_error("asc: row " + std::to_string(i) + " is short");
            if (k < 0 || k > d)
                throw parse_error("asc: relation index " + std::to_string(k) + " out of range [0," +
                                  std::to_string(d) + "]");
            rels[k].set(i, j);
        }
        if (row >> extra) throw parse_error("asc: row " + std::to_string(i) + " has trailing tokens");
    }
    while (std::getline(in, line)) {
        std::istringstream rest(line);
        if (rest >> extra) throw parse_error("asc: trailing garbage after matrix");
    }
    return AssociationScheme(std::move(rels));
}

void write_scheme(std::ostream& out, const AssociationScheme& x) {
    out << x.order() << ' ' << x.class_count() << "\n";
    for (Point i = 1; i <= x.order(); ++i) {
        for (Point j = 1; j <= x.order(); ++j) {
            if (j > 1) out << ' ';
            out << x.relation_index_at(i, j);
        }
        out << "\n";
    }
}

AssociationScheme load_scheme(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    return read_scheme(f);
}

void save_scheme(const std::string& path, const AssociationScheme& x) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot write '" + path + "'");
    write_scheme(f, x);
}

}  // namespace skewhad
