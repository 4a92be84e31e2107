#include "nvlab/group.hpp"

#include "nvlab/errors.hpp"

#include <string>

namespace nvlab {

FiniteGroup::FiniteGroup(std::vector<std::vector<long>> table, long identity)
    : table_(std::move(table)), identity_(identity) {
    const long n = (long)table_.size();
    if (n == 0)
        fail(ErrorKind::SchemaViolation, "group table is empty");
    if (identity_ < 0 || identity_ >= n)
        fail(ErrorKind::SchemaViolation, "identity index out of range");
    for (long a = 0; a < n; ++a) {
        if ((long)table_[a].size() != n)
            fail(ErrorKind::SchemaViolation, "group table is not square");
        for (long b = 0; b < n; ++b)
            if (table_[a][b] < 0 || table_[a][b] >= n)
                fail(ErrorKind::SchemaViolation, "group table entry out of range");
    }
    for (long a = 0; a < n; ++a)
        if (table_[identity_][a] != a || table_[a][identity_] != a)
            fail(ErrorKind::SchemaViolation,
                 "claimed identity does not act as one on element " + std::to_string(a));
    inverse_.assign(n, -1);
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0)
            fail(ErrorKind::SchemaViolation, "element " + std::to_string(a) + " has no inverse");
    }
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    fail(ErrorKind::SchemaViolation,
                         "multiplication table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
}

FiniteGroup FiniteGroup::trivial() {
    return FiniteGroup({{0}}, 0);
}

FiniteGroup FiniteGroup::cyclic(long n) {
    std::vector<std::vector<long>> t(n, std::vector<long>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::klein_four() {
    // xor table on {0,1,2,3}
    std::vector<std::vector<long>> t(4, std::vector<long>(4));
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return FiniteGroup(std::move(t), 0);
}

}  // namespace nvlab
