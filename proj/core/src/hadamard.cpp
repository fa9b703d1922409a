#include "skewhad/hadamard.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewhad {

bool is_hadamard(const SignMatrix& m) {
    const int n = m.order();
    for (Point i = 1; i <= n; ++i) {
        for (Point j = i; j <= n; ++j) {
            std::int32_t dot = 0;
            for (Point k = 1; k <= n; ++k) dot += m.at(i, k) * m.at(j, k);
            if (dot != (i == j ? n : 0)) return false;
        }
    }
    return true;
}

bool is_skew_hadamard(const SignMatrix& m) {
    const int n = m.order();
    for (Point i = 1; i <= n; ++i) {
        if (m.at(i, i) != 1) return false;
        for (Point j = i + 1; j <= n; ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    }
    return is_hadamard(m);
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

SignMatrix paley_skew_hadamard(int q) {
    if (!is_prime(q)) throw std::invalid_argument("paley: q = " + std::to_string(q) + " is not prime");
    if (q % 4 != 3) throw std::invalid_argument("paley: q = " + std::to_string(q) + " is not 3 (mod 4)");
    if (q + 1 > kMaxOrder) throw std::invalid_argument("paley: order q+1 exceeds " + std::to_string(kMaxOrder));

    // chi(a) = +1 iff a is a nonzero quadratic residue mod q.
    std::vector<char> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[static_cast<long long>(x) * x % q] = 1;

    const int n = q + 1;
    SignMatrix h(n);
    for (Point j = 1; j <= n; ++j) h.set(1, j, 1);
    for (Point i = 2; i <= n; ++i) h.set(i, 1, -1);
    for (Point i = 2; i <= n; ++i) {
        for (Point j = 2; j <= n; ++j) {
            if (i == j) { h.set(i, j, 1); continue; }
            const int diff = ((j - i) % q + q) % q;
            h.set(i, j, residue[diff] ? 1 : -1);
        }
    }
    return h;
}

bool is_normalized(const SignMatrix& h) {
    for (Point j = 1; j <= h.order(); ++j)
        if (h.at(1, j) != 1) return false;
    return true;
}

SignMatrix normalize(const SignMatrix& h) {
    if (!is_skew_hadamard(h)) throw std::invalid_argument("normalize: input is not skew-Hadamard");
    const int n = h.order();
    // D*H*D with D_jj = H_1j; D^2 = I keeps skewness exact.
    SignMatrix out(n);
    for (Point i = 1; i <= n; ++i)
        for (Point j = 1; j <= n; ++j) out.set(i, j, h.at(1, i) * h.at(i, j) * h.at(1, j));
    return out;
}

SignMatrix doubling(const SignMatrix& h) {
    if (!is_skew_hadamard(h)) throw std::invalid_argument("doubling: input is not skew-Hadamard");
    const int n = h.order();
    if (2 * n > kMaxOrder) throw std::invalid_argument("doubling: result order exceeds " + std::to_string(kMaxOrder));

    // S = H - I; blocks [[I+S, I+S], [-I+S, I-S]] without materializing S:
    // I+S = H, -I+S = H - 2I, I-S = 2I - H.
    SignMatrix out(2 * n);
    for (Point i = 1; i <= n; ++i) {
        for (Point j = 1; j <= n; ++j) {
            const int hij = h.at(i, j);
            const int diag = (i == j) ? 1 : 0;
            out.set(i, j, hij);
            out.set(i, j + n, hij);
            out.set(i + n, j, hij - 2 * diag);
            out.set(i + n, j + n, 2 * diag - hij);
        }
    }
    if (!is_skew_hadamard(out)) throw std::logic_error("doubling: result failed the skew-Hadamard check");
    return out;
}

}  // namespace skewhad
