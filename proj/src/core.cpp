#include "latfact/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace latfact {

namespace {

// Kahn topological sort of the cover digraph; throws NotAcyclic.
std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& up_adj) {
    std::vector<int> indeg(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y : up_adj[x]) indeg[y]++;
    std::vector<int> queue, order;
    order.reserve(n);
    for (int x = 0; x < n; ++x)
        if (indeg[x] == 0) queue.push_back(x);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        order.push_back(x);
        for (int y : up_adj[x])
            if (--indeg[y] == 0) queue.push_back(y);
    }
    if (int(order.size()) != n)
        throw LatticeError(errc::not_acyclic, "cover relation has a cycle");
    return order;
}

} // namespace

FiniteLattice FiniteLattice::build(std::vector<std::string> labels,
                                   std::vector<std::pair<int, int>> covers) {
    FiniteLattice L;
    const int n = int(labels.size());
    if (n == 0)
        throw LatticeError(errc::no_unique_bottom, "empty element set");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (int(seen.size()) != n)
            throw LatticeError(errc::bad_input, "labels not distinct");
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw LatticeError(errc::bad_input, "cover index out of range", lo, hi);
        if (lo == hi)
            throw LatticeError(errc::not_acyclic, "self-loop in covers", lo, hi);
    }

    L.n_ = n;
    L.labels_ = std::move(labels);
    L.covers_ = covers;
    L.up_adj_.assign(n, {});
    L.down_adj_.assign(n, {});
    for (auto [lo, hi] : covers) {
        L.up_adj_[lo].push_back(hi);
        L.down_adj_[hi].push_back(lo);
    }
    for (int x = 0; x < n; ++x) {
        std::sort(L.up_adj_[x].begin(), L.up_adj_[x].end());
        std::sort(L.down_adj_[x].begin(), L.down_adj_[x].end());
    }

    const std::vector<int> topo = topo_order(n, L.up_adj_);
    std::vector<int> topo_pos(n);
    for (int i = 0; i < n; ++i) topo_pos[topo[i]] = i;

    // Reflexive-transitive closure.
    L.up_.assign(n, BitVec(std::size_t(n)));
    L.down_.assign(n, BitVec(std::size_t(n)));
    for (int i = n - 1; i >= 0; --i) {
        int x = topo[i];
        L.up_[x].set(std::size_t(x));
        for (int y : L.up_adj_[x]) L.up_[x] |= L.up_[y];
    }
    for (int i = 0; i < n; ++i) {
        int y = topo[i];
        L.down_[y].set(std::size_t(y));
        for (int x : L.down_adj_[y]) L.down_[y] |= L.down_[x];
    }

    // Reject covers that are implied by other covers.
    for (auto [lo, hi] : covers) {
        BitVec between = L.up_[lo];
        between &= L.down_[hi];
        if (between.count() != 2)
            throw LatticeError(errc::transitive_cover_edge,
                               L.labels_[lo] + " < " + L.labels_[hi], lo, hi);
    }

    int nbot = 0, ntop = 0;
    for (int x = 0; x < n; ++x) {
        if (L.down_[x].count() == 1) { L.bottom_ = x; ++nbot; }
        if (L.up_[x].count() == 1) { L.top_ = x; ++ntop; }
    }
    if (nbot != 1)
        throw LatticeError(errc::no_unique_bottom,
                           std::to_string(nbot) + " minimal elements");
    if (ntop != 1)
        throw LatticeError(errc::no_unique_top,
                           std::to_string(ntop) + " maximal elements");

    // Meet and join tables. Rows are stored with columns permuted into
    // topological order so the extremal candidate falls out of a word scan.
    std::vector<BitVec> down_t(n, BitVec(std::size_t(n)));
    std::vector<BitVec> up_t(n, BitVec(std::size_t(n)));
    for (int x = 0; x < n; ++x) {
        L.down_[x].for_each([&](int z) { down_t[x].set(std::size_t(topo_pos[z])); });
        L.up_[x].for_each([&](int z) { up_t[x].set(std::size_t(topo_pos[z])); });
    }

    L.meet_.assign(std::size_t(n) * n, -1);
    L.join_.assign(std::size_t(n) * n, -1);
    BitVec cand(std::size_t(n));
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            cand = down_t[x];
            cand &= down_t[y];
            int pos = cand.highest(); // candidates are nonempty: bottom is there
            int g = topo[pos];
            if (!cand.is_subset_of(down_t[g]))
                throw LatticeError(errc::meet_fails,
                                   L.labels_[x] + " ^ " + L.labels_[y], x, y);
            L.meet_[std::size_t(x) * n + y] = g;
            L.meet_[std::size_t(y) * n + x] = g;
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            cand = up_t[x];
            cand &= up_t[y];
            int pos = cand.lowest();
            int j = topo[pos];
            if (!cand.is_subset_of(up_t[j]))
                throw LatticeError(errc::join_fails,
                                   L.labels_[x] + " v " + L.labels_[y], x, y);
            L.join_[std::size_t(x) * n + y] = j;
            L.join_[std::size_t(y) * n + x] = j;
        }
    }

    L.atoms_ = L.up_adj_[L.bottom_];
    L.coatoms_ = L.down_adj_[L.top_];
    L.atom_pos_.assign(n, -1);
    for (int i = 0; i < int(L.atoms_.size()); ++i) L.atom_pos_[L.atoms_[i]] = i;
    L.atoms_below_.assign(n, BitVec(L.atoms_.size()));
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < int(L.atoms_.size()); ++i)
            if (L.leq(L.atoms_[i], x)) L.atoms_below_[x].set(std::size_t(i));

    return L;
}

bool FiniteLattice::is_cover(int x, int y) const {
    if (!lt(x, y)) return false;
    const auto& ups = up_adj_[x];
    return std::binary_search(ups.begin(), ups.end(), y);
}

int FiniteLattice::join_of_atoms_below(int x) const {
    int j = bottom_;
    atoms_below_[x].for_each([&](int i) { j = join(j, atoms_[i]); });
    return j;
}

std::vector<int> FiniteLattice::complements_in(int x, int lo, int hi) const {
    if (!leq(lo, x) || !leq(x, hi))
        throw LatticeError(errc::not_comparable, "need lo <= x <= hi", lo, hi);
    std::vector<int> out;
    BitVec box = up_[lo];
    box &= down_[hi];
    box.for_each([&](int y) {
        if (meet(y, x) == lo && join(y, x) == hi) out.push_back(y);
    });
    return out;
}

FiniteLattice FiniteLattice::dual() const {
    FiniteLattice D;
    D.n_ = n_;
    D.labels_ = labels_;
    D.covers_.reserve(covers_.size());
    for (auto [lo, hi] : covers_) D.covers_.emplace_back(hi, lo);
    std::sort(D.covers_.begin(), D.covers_.end());
    D.up_ = down_;
    D.down_ = up_;
    D.meet_ = join_;
    D.join_ = meet_;
    D.bottom_ = top_;
    D.top_ = bottom_;
    D.up_adj_ = down_adj_;
    D.down_adj_ = up_adj_;
    D.atoms_ = coatoms_;
    D.coatoms_ = atoms_;
    D.atom_pos_.assign(n_, -1);
    for (int i = 0; i < int(D.atoms_.size()); ++i) D.atom_pos_[D.atoms_[i]] = i;
    D.atoms_below_.assign(n_, BitVec(D.atoms_.size()));
    for (int x = 0; x < n_; ++x)
        for (int i = 0; i < int(D.atoms_.size()); ++i)
            if (D.leq(D.atoms_[i], x)) D.atoms_below_[x].set(std::size_t(i));
    return D;
}

std::vector<int> FiniteLattice::first_maximal_chain() const {
    std::vector<int> chain{bottom_};
    int cur = bottom_;
    while (cur != top_) {
        cur = up_adj_[cur].front(); // adjacency is sorted
        chain.push_back(cur);
    }
    return chain;
}

Sublattice induced_sublattice(const FiniteLattice& L, const std::vector<int>& elems) {
    Sublattice S;
    S.to_parent = elems;
    std::sort(S.to_parent.begin(), S.to_parent.end());
    S.to_parent.erase(std::unique(S.to_parent.begin(), S.to_parent.end()),
                      S.to_parent.end());
    const int k = int(S.to_parent.size());
    S.from_parent.assign(L.size(), -1);
    for (int i = 0; i < k; ++i) S.from_parent[S.to_parent[i]] = i;

    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = L.label(S.to_parent[i]);

    // Covers of the induced order by transitive reduction.
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j || !L.lt(S.to_parent[i], S.to_parent[j])) continue;
            bool direct = true;
            for (int m = 0; m < k && direct; ++m)
                if (m != i && m != j && L.lt(S.to_parent[i], S.to_parent[m]) &&
                    L.lt(S.to_parent[m], S.to_parent[j]))
                    direct = false;
            if (direct) covers.emplace_back(i, j);
        }
    }
    S.lattice = FiniteLattice::build(std::move(labels), std::move(covers));
    return S;
}

Sublattice interval(const FiniteLattice& L, int lo, int hi) {
    if (!L.leq(lo, hi))
        throw LatticeError(errc::not_comparable, "interval endpoints", lo, hi);
    BitVec box = L.up(lo);
    box &= L.down(hi);

    Sublattice S;
    S.to_parent = box.to_vector();
    const int k = int(S.to_parent.size());
    S.from_parent.assign(L.size(), -1);
    for (int i = 0; i < k; ++i) S.from_parent[S.to_parent[i]] = i;

    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = L.label(S.to_parent[i]);

    // Inside an interval the parent cover relation is the cover relation.
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < k; ++i)
        for (int y : L.upper_covers(S.to_parent[i]))
            if (S.from_parent[y] >= 0) covers.emplace_back(i, S.from_parent[y]);

    S.lattice = FiniteLattice::build(std::move(labels), std::move(covers));
    return S;
}

FiniteLattice product(const FiniteLattice& L1, const FiniteLattice& L2) {
    const int n1 = L1.size(), n2 = L2.size();
    std::vector<std::string> labels;
    labels.reserve(std::size_t(n1) * n2);
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y)
            labels.push_back("(" + L1.label(x) + "," + L2.label(y) + ")");
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) {
            for (int x2 : L1.upper_covers(x))
                covers.emplace_back(x * n2 + y, x2 * n2 + y);
            for (int y2 : L2.upper_covers(y))
                covers.emplace_back(x * n2 + y, x * n2 + y2);
        }
    return FiniteLattice::build(std::move(labels), std::move(covers));
}

bool is_maximal_chain(const FiniteLattice& L, const std::vector<int>& chain) {
    if (chain.empty() || chain.front() != L.bottom() || chain.back() != L.top())
        return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!L.is_cover(chain[i], chain[i + 1])) return false;
    return true;
}

} // namespace latfact
