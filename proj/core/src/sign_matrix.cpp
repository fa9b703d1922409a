#include "skewhad/sign_matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace skewhad {

SignMatrix::SignMatrix(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("SignMatrix: order must be positive");
    if (order > kMaxOrder) throw std::invalid_argument("SignMatrix: order exceeds " + std::to_string(kMaxOrder));
    cells_.assign(static_cast<std::size_t>(order) * order, 1);
}

void SignMatrix::set(Point i, Point j, int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("SignMatrix: entry must be +1 or -1");
    cells_[idx(i, j)] = static_cast<std::int8_t>(value);
}

SignMatrix SignMatrix::transposed() const {
    SignMatrix t(order_);
    for (Point i = 1; i <= order_; ++i)
        for (Point j = 1; j <= order_; ++j) t.set(j, i, at(i, j));
    return t;
}

namespace {

// Splits one line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

SignMatrix read_sign_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("shm: missing order line");
    const auto head = tokens_of(line);
    if (head.size() != 1) throw parse_error("shm: order line must hold a single integer");
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(head[0], &pos);
        if (pos != head[0].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw parse_error("shm: bad order '" + head[0] + "'");
    }
    if (n < 1 || n > kMaxOrder) throw parse_error("shm: order out of range");

    SignMatrix m(n);
    for (Point i = 1; i <= n; ++i) {
        if (!std::getline(in, line)) throw parse_error("shm: missing row " + std::to_string(i));
        const auto row = tokens_of(line);
        if (static_cast<int>(row.size()) != n)
            throw parse_error("shm: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                              " tokens, expected " + std::to_string(n));
        for (Point j = 1; j <= n; ++j) {
            if (row[j - 1] == "+") m.set(i, j, 1);
            else if (row[j - 1] == "-") m.set(i, j, -1);
            else throw parse_error("shm: bad token '" + row[j - 1] + "' in row " + std::to_string(i));
        }
    }
    while (std::getline(in, line)) {
        if (!tokens_of(line).empty()) throw parse_error("shm: trailing garbage after matrix");
    }
    return m;
}

void write_sign_matrix(std::ostream& out, const SignMatrix& m) {
    out << m.order() << "\n";
    for (Point i = 1; i <= m.order(); ++i) {
        for (Point j = 1; j <= m.order(); ++j) {
            if (j > 1) out << ' ';
            out << (m.at(i, j) > 0 ? '+' : '-');
        }
        out << "\n";
    }
}

SignMatrix load_sign_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    return read_sign_matrix(f);
}

void save_sign_matrix(const std::string& path, const SignMatrix& m) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot write '" + path + "'");
    write_sign_matrix(f, m);
}

}  // namespace skewhad
