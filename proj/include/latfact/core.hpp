#ifndef LATFACT_CORE_HPP
#define LATFACT_CORE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latfact/bitvec.hpp"
#include "latfact/errors.hpp"

namespace latfact {

// A finite lattice over dense element indices 0..n-1. Construction validates
// everything up front (acyclicity, unique bounds, totality of meet and join,
// transitive-reduction of the cover set); afterwards the value is immutable
// and every query is a table read, so instances can be shared freely across
// threads.
class FiniteLattice {
public:
    // covers are ordered pairs (lo, hi) meaning lo is covered by hi.
    static FiniteLattice build(std::vector<std::string> labels,
                               std::vector<std::pair<int, int>> covers);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_[x]; }
    // Sorted, deduplicated cover pairs.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    int bottom() const { return bottom_; }
    int top() const { return top_; }

    bool leq(int x, int y) const { return up_[x].test(y); }
    bool lt(int x, int y) const { return x != y && up_[x].test(y); }
    bool is_cover(int x, int y) const;

    int meet(int x, int y) const { return meet_[std::size_t(x) * n_ + y]; }
    int join(int x, int y) const { return join_[std::size_t(x) * n_ + y]; }

    // Row bit sets over element indices: up(x) = { y : x <= y }.
    const BitVec& up(int x) const { return up_[x]; }
    const BitVec& down(int x) const { return down_[x]; }

    const std::vector<int>& atoms() const { return atoms_; }
    const std::vector<int>& coatoms() const { return coatoms_; }
    // Mask over atom positions (indices into atoms()) of atoms below x.
    const BitVec& atoms_below(int x) const { return atoms_below_[x]; }
    // Position of element a within atoms(), or -1.
    int atom_position(int a) const { return atom_pos_[a]; }
    // Join of all atoms below x (bottom if none): the maximal atomic
    // element of [0,x].
    int join_of_atoms_below(int x) const;
    bool is_atomic_element(int x) const { return join_of_atoms_below(x) == x; }

    const std::vector<int>& upper_covers(int x) const { return up_adj_[x]; }
    const std::vector<int>& lower_covers(int x) const { return down_adj_[x]; }

    // All y in [lo,hi] with y ^ x = lo and y v x = hi. Requires lo <= x <= hi.
    std::vector<int> complements_in(int x, int lo, int hi) const;

    FiniteLattice dual() const;

    // Lexicographically smallest maximal chain bottom..top by element index.
    std::vector<int> first_maximal_chain() const;

private:
    FiniteLattice() = default;

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<BitVec> up_, down_;
    std::vector<int> meet_, join_;
    int bottom_ = -1, top_ = -1;
    std::vector<int> atoms_, coatoms_, atom_pos_;
    std::vector<BitVec> atoms_below_;
    std::vector<std::vector<int>> up_adj_, down_adj_;
};

// A materialized interval (or other induced sublattice): a FiniteLattice of
// its own plus the index maps into the parent.
struct Sublattice {
    FiniteLattice lattice;
    std::vector<int> to_parent;   // sub index -> parent index
    std::vector<int> from_parent; // parent index -> sub index, or -1

    int parent_of(int sub) const { return to_parent[sub]; }
    int sub_of(int parent) const { return from_parent[parent]; }
};

// Materialize [lo,hi]; throws NotComparable unless lo <= hi.
Sublattice interval(const FiniteLattice& L, int lo, int hi);

// Induced lattice on an arbitrary element subset that happens to be a
// lattice under the induced order (meets/joins are recomputed, not
// inherited). Used for meet-closed sublattices; build() validates.
Sublattice induced_sublattice(const FiniteLattice& L, const std::vector<int>& elems);

// Direct product; labels are "(a,b)"; index of (x1,x2) is x1*|L2|+x2.
FiniteLattice product(const FiniteLattice& L1, const FiniteLattice& L2);

// True if chain is bottom = c_0 < c_1 < ... < c_k = top with every step a
// cover. A single-element lattice has the maximal chain {bottom}.
bool is_maximal_chain(const FiniteLattice& L, const std::vector<int>& chain);

} // namespace latfact

#endif
