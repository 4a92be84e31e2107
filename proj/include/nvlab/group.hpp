#ifndef NVLAB_GROUP_HPP
#define NVLAB_GROUP_HPP

#include <vector>

namespace nvlab {

/* Finite group as a multiplication table. Elements are indices 0..n-1;
 * table[a][b] is the product a*b. The constructor verifies the group
 * axioms outright, so a held instance is always a group. */
class FiniteGroup {
  public:
    FiniteGroup(std::vector<std::vector<long>> table, long identity);

    long order() const { return (long)table_.size(); }
    long identity() const { return identity_; }
    long mul(long a, long b) const { return table_[a][b]; }
    long inv(long a) const { return inverse_[a]; }

    static FiniteGroup trivial();
    static FiniteGroup cyclic(long n);
    static FiniteGroup klein_four();

  private:
    std::vector<std::vector<long>> table_;
    std::vector<long> inverse_;
    long identity_;
};

}  // namespace nvlab

#endif
