#include "arrangetop/resonance.hpp"

#include <algorithm>
#include <functional>

namespace arrangetop {

CycNumber WeightVector::sum() const {
    CycNumber s(0);
    for (const auto& x : a) s += x;
    return s;
}

// ---------------------------------------------------------------------------
// Orlik-Solomon structure
// ---------------------------------------------------------------------------

OSAlgebra::OSAlgebra(const Arrangement& a) : arr_(&a), d_(a.size()) {
    size_t off = 0;
    if (d_ >= 2) {
        const auto& lat = a.lattice();
        point_offset_.resize(lat.points.size());
        for (size_t p = 0; p < lat.points.size(); ++p) {
            point_offset_[p] = off;
            off += lat.points[p].multiplicity() - 1;
        }
    }
    basis2_size_ = off;

    // omega_0 ^ e_i for omega_0 = sum of all generators; reduce to echelon form
    std::vector<std::vector<Rational>> rows;
    for (int i = 1; i <= static_cast<int>(d_); ++i) {
        std::vector<Rational> row(basis2_size_, Rational(0));
        for (int j = 1; j <= static_cast<int>(d_); ++j) {
            if (j == i) continue;
            for (auto [idx, coef] : wedge(j, i)) row[idx] += coef;
        }
        rows.push_back(std::move(row));
    }
    // reduced row echelon form over Q, so reduction below is a projection
    for (auto& row : rows) {
        for (size_t k = 0; k < w_pivots_.size(); ++k) {
            Rational f = row[w_pivots_[k]];
            if (f == 0) continue;
            for (size_t j = 0; j < basis2_size_; ++j) row[j] -= f * w_rows_[k][j];
        }
        size_t lead = 0;
        while (lead < basis2_size_ && row[lead] == 0) ++lead;
        if (lead == basis2_size_) continue;
        Rational inv = 1 / row[lead];
        for (auto& x : row) x *= inv;
        for (size_t k = 0; k < w_rows_.size(); ++k) {
            Rational f = w_rows_[k][lead];
            if (f == 0) continue;
            for (size_t j = 0; j < basis2_size_; ++j) w_rows_[k][j] -= f * row[j];
        }
        w_rows_.push_back(row);
        w_pivots_.push_back(lead);
    }
    dim2_proj_ = basis2_size_ - w_rows_.size();

    // audit against Euler characteristic bookkeeping: b2 = chi - 1 + b1
    long chi = a.euler_complement();
    if (static_cast<long>(dim2_proj_) != chi - 1 + static_cast<long>(b1()))
        throw InternalError("degree-2 dimension disagrees with the Euler characteristic");
}

std::vector<std::pair<size_t, Rational>> OSAlgebra::wedge(int i, int j) const {
    if (i == j) return {};
    Rational sign(1);
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    const auto& lat = arr_->lattice();
    int p = lat.point_of_pair[i - 1][j - 1];
    const auto& inc = lat.points[p].incident;
    int i0 = inc.front();
    size_t off = point_offset_[p];
    auto slot = [&](int line) {
        // position of e_{i0, line} within the point's block
        size_t pos = std::lower_bound(inc.begin(), inc.end(), line) - inc.begin();
        return off + pos - 1; // inc[0] = i0 has no slot
    };
    std::vector<std::pair<size_t, Rational>> out;
    if (i == i0) {
        out.push_back({slot(j), sign});
    } else {
        // e_{ij} = e_{i0 j} - e_{i0 i} inside the point's summand
        out.push_back({slot(j), sign});
        out.push_back({slot(i), -sign});
    }
    return out;
}

std::vector<CycNumber> OSAlgebra::project(std::vector<CycNumber> v) const {
    for (size_t k = 0; k < w_rows_.size(); ++k) {
        size_t piv = w_pivots_[k];
        if (v[piv].is_zero()) continue;
        CycNumber f = v[piv]; // echelon rows are normalized to pivot 1
        for (size_t j = piv; j < basis2_size_; ++j) {
            if (w_rows_[k][j] != 0) v[j] -= f * CycNumber(w_rows_[k][j]);
        }
    }
    return v;
}

int OSAlgebra::resonance_dim(const WeightVector& w) const {
    if (w.a.size() != d_) throw InternalError("weight vector length mismatch");
    if (!w.sum().is_zero()) throw NotInTorusLie();
    bool zero = std::all_of(w.a.begin(), w.a.end(), [](const CycNumber& c) { return c.is_zero(); });

    // matrix of x -> (a /\ x) in the projective degree-2 part, columns e_i
    CycMatrix m(basis2_size_, d_);
    for (int i = 1; i <= static_cast<int>(d_); ++i) {
        std::vector<CycNumber> col(basis2_size_, CycNumber(0));
        for (int j = 1; j <= static_cast<int>(d_); ++j) {
            if (j == i || w.a[j - 1].is_zero()) continue;
            for (auto [idx, coef] : wedge(j, i)) col[idx] += w.a[j - 1] * CycNumber(coef);
        }
        col = project(std::move(col));
        for (size_t r = 0; r < basis2_size_; ++r) m.at(r, i - 1) = col[r];
    }
    size_t rank = m.rank_kernel().rank;
    return static_cast<int>(b1() - rank) - (zero ? 0 : 1);
}

OSAlgebra build_os(const Arrangement& a) { return OSAlgebra(a); }

// ---------------------------------------------------------------------------
// components
// ---------------------------------------------------------------------------

std::vector<ResonanceComponent> local_components(const Arrangement& a) {
    std::vector<ResonanceComponent> out;
    const auto& lat = a.lattice();
    for (size_t p = 0; p < lat.points.size(); ++p) {
        const auto& inc = lat.points[p].incident;
        if (inc.size() < 3) continue;
        ResonanceComponent comp;
        comp.kind = ResonanceComponent::Kind::Local;
        comp.point_index = static_cast<int>(p);
        comp.support = inc;
        comp.dimension = inc.size() - 1;
        for (size_t j = 1; j < inc.size(); ++j) {
            WeightVector w;
            w.a.assign(a.size(), CycNumber(0));
            w.a[inc[0] - 1] = CycNumber(1);
            w.a[inc[j] - 1] = CycNumber(-1);
            comp.basis.push_back(std::move(w));
        }
        out.push_back(std::move(comp));
    }
    return out;
}

int NetPartition::exponent(int line) const {
    auto it = exponents.find(line);
    return it == exponents.end() ? 1 : it->second;
}

std::vector<int> NetPartition::support() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.insert(s.end(), b.begin(), b.end());
    std::sort(s.begin(), s.end());
    return s;
}

bool net_axiom_holds(const Arrangement& a, const NetPartition& net) {
    if (net.k() < 3) return false;
    const auto& lat = a.lattice();
    std::vector<int> block_of(a.size() + 1, 0); // 0 = outside the support
    for (size_t b = 0; b < net.blocks.size(); ++b) {
        if (net.blocks[b].empty()) return false;
        for (int line : net.blocks[b]) {
            if (line < 1 || line > static_cast<int>(a.size()) || block_of[line] != 0) return false;
            block_of[line] = static_cast<int>(b) + 1;
        }
    }
    for (const auto& pt : lat.points) {
        std::vector<int> count(net.k() + 1, 0);
        int blocks_present = 0;
        for (int line : pt.incident) {
            int b = block_of[line];
            if (b == 0) continue;
            if (count[b] == 0) ++blocks_present;
            ++count[b];
        }
        if (blocks_present >= 2) {
            for (size_t b = 1; b <= net.k(); ++b)
                if (count[b] != 1) return false;
        }
    }
    return true;
}

namespace {

// Recursive assignment search for nets with exactly k blocks. Lines are
// assigned in index order to a block or skipped; blocks are opened in
// order (restricted growth), which enumerates each partition once.
struct NetSearcher {
    const Arrangement& arr;
    const IntersectionLattice& lat;
    int k;
    int d;
    std::vector<int> block_of;   // 0 unprocessed/skipped, 1..k assigned
    std::vector<NetPartition> found;

    NetSearcher(const Arrangement& a, int kk)
        : arr(a), lat(a.lattice()), k(kk), d(static_cast<int>(a.size())),
          block_of(a.size() + 1, 0) {}

    bool assignment_ok(int line, int block) const {
        for (const auto& pt : lat.points) {
            if (!std::binary_search(pt.incident.begin(), pt.incident.end(), line)) continue;
            std::vector<int> count(k + 1, 0);
            int blocks_present = 0;
            for (int l2 : pt.incident) {
                int b = (l2 == line) ? block : block_of[l2];
                if (b == 0) continue;
                if (count[b] == 0) ++blocks_present;
                ++count[b];
            }
            if (blocks_present >= 2) {
                if (static_cast<int>(pt.incident.size()) < k) return false;
                for (int b = 1; b <= k; ++b)
                    if (count[b] > 1) return false;
            }
        }
        return true;
    }

    void record() {
        NetPartition net;
        net.blocks.assign(k, {});
        for (int l = 1; l <= d; ++l)
            if (block_of[l] > 0) net.blocks[block_of[l] - 1].push_back(l);
        std::sort(net.blocks.begin(), net.blocks.end());
        if (net_axiom_holds(arr, net)) found.push_back(std::move(net));
    }

    void rec(int line, int used) {
        if (line > d) {
            if (used == k) record();
            return;
        }
        if (d - line >= k - used) {
            // skipping this line still leaves enough lines to fill k blocks
            block_of[line] = 0;
            rec(line + 1, used);
        }
        int max_block = std::min(used + 1, k);
        for (int b = 1; b <= max_block; ++b) {
            if (!assignment_ok(line, b)) continue;
            block_of[line] = b;
            rec(line + 1, std::max(used, b));
            block_of[line] = 0;
        }
    }
};

} // namespace

std::vector<NetPartition> net_search(const Arrangement& a, int max_k) {
    if (max_k < 3) throw Error(ErrorClass::Precondition, "net search needs max_k >= 3");
    std::vector<NetPartition> all;
    for (int k = 3; k <= std::min<int>(max_k, static_cast<int>(a.size())); ++k) {
        NetSearcher s(a, k);
        s.rec(1, 0);
        all.insert(all.end(), s.found.begin(), s.found.end());
    }
    std::sort(all.begin(), all.end(),
              [](const NetPartition& x, const NetPartition& y) { return x.blocks < y.blocks; });
    all.erase(std::unique(all.begin(), all.end(),
                          [](const NetPartition& x, const NetPartition& y) {
                              return x.blocks == y.blocks;
                          }),
              all.end());
    return all;
}

std::vector<WeightVector> net_weight_basis(const Arrangement& a, const NetPartition& net) {
    std::vector<WeightVector> basis;
    const auto& blocks = net.blocks;
    size_t k = blocks.size();
    for (size_t j = 0; j + 1 < k; ++j) {
        WeightVector w;
        w.a.assign(a.size(), CycNumber(0));
        long size_j = static_cast<long>(blocks[j].size());
        long size_k = static_cast<long>(blocks[k - 1].size());
        for (int line : blocks[j]) w.a[line - 1] = CycNumber(size_k);
        for (int line : blocks[k - 1]) w.a[line - 1] = CycNumber(-size_j);
        basis.push_back(std::move(w));
    }
    return basis;
}

namespace {

// A net whose support lies on concurrent lines spans a subspace of the
// local component of the common point; only the rest give new components.
bool support_is_concurrent(const Arrangement& a, const NetPartition& net) {
    auto s = net.support();
    if (s.size() < 2) return true;
    const auto& lat = a.lattice();
    int p = lat.point_of_pair[s[0] - 1][s[1] - 1];
    const auto& inc = lat.points[p].incident;
    return std::includes(inc.begin(), inc.end(), s.begin(), s.end());
}

} // namespace

std::vector<ResonanceComponent> resonance_components(const Arrangement& a, int max_k) {
    std::vector<ResonanceComponent> out = local_components(a);
    for (auto& net : net_search(a, max_k)) {
        if (support_is_concurrent(a, net)) continue;
        ResonanceComponent comp;
        comp.kind = ResonanceComponent::Kind::Global;
        comp.support = net.support();
        comp.dimension = net.k() - 1;
        comp.basis = net_weight_basis(a, net);
        comp.net = std::move(net);
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace arrangetop
