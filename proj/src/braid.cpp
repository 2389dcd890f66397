#include "arrangetop/braid.hpp"

#include <algorithm>
#include <numeric>

namespace arrangetop {

// ---------------------------------------------------------------------------
// deconing
// ---------------------------------------------------------------------------

namespace {

using Mat3 = std::array<std::array<CycNumber, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CycNumber s(0);
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

std::array<CycNumber, 3> mat_apply(const Mat3& m, const std::array<CycNumber, 3>& v) {
    std::array<CycNumber, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

// cofactor matrix; equals det(m) * inverse-transpose, which is all we need
// for transforming line coefficients projectively
Mat3 cofactor(const Mat3& m) {
    auto minor = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] = minor(i, j);
    return c;
}

CycNumber det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

AffineArrangement decone(const Arrangement& a, int infinity_index) {
    const size_t d = a.size();
    if (infinity_index < 1 || infinity_index > static_cast<int>(d))
        throw Error(ErrorClass::Input, "line index out of range");
    const auto& linf = a.line(infinity_index).coeffs();

    auto unit = [](int i) {
        std::array<CycNumber, 3> e = {CycNumber(0), CycNumber(0), CycNumber(0)};
        e[i] = CycNumber(1);
        return e;
    };
    Mat3 base;
    base[2] = linf;
    if (!linf[2].is_zero()) {
        base[0] = unit(0);
        base[1] = unit(1);
    } else if (!linf[1].is_zero()) {
        base[0] = unit(0);
        base[1] = unit(2);
    } else {
        base[0] = unit(1);
        base[1] = unit(2);
    }
    if (det3(base).is_zero()) throw InternalError("singular deconing frame");

    // affine coordinates of the lattice points off the infinity line,
    // in the base frame (before shearing)
    std::vector<std::pair<CycNumber, CycNumber>> pts;
    if (d >= 2) {
        for (const auto& p : a.lattice().points) {
            if (a.line(infinity_index).eval(p.point.h).is_zero()) continue;
            auto q = mat_apply(base, p.point.h);
            pts.push_back({q[0] / q[2], q[1] / q[2]});
        }
    }

    long bad_bound = static_cast<long>(d) + static_cast<long>(pts.size() * pts.size()) + 2;
    for (long step = 0; step <= 2 * bad_bound + 2; ++step) {
        long t = (step % 2 == 0) ? step / 2 : -(step + 1) / 2; // 0, 1, -1, 2, -2, ...
        Mat3 shear = {{{CycNumber(1), CycNumber(t), CycNumber(0)},
                       {CycNumber(0), CycNumber(1), CycNumber(0)},
                       {CycNumber(0), CycNumber(0), CycNumber(1)}}};
        Mat3 total = mat_mul(shear, base);
        Mat3 cof = cofactor(total);

        bool ok = true;
        std::vector<AffineLine> lines;
        for (int i = 1; i <= static_cast<int>(d) && ok; ++i) {
            if (i == infinity_index) continue;
            auto l = mat_apply(cof, a.line(i).coeffs());
            if (l[1].is_zero()) {
                ok = false; // vertical line
                break;
            }
            lines.push_back({-l[0] / l[1], -l[2] / l[1], i});
        }
        if (ok) {
            // no two intersection points may share an x-coordinate
            for (size_t p = 0; p < pts.size() && ok; ++p) {
                CycNumber xp = pts[p].first + CycNumber(t) * pts[p].second;
                for (size_t q = p + 1; q < pts.size() && ok; ++q) {
                    CycNumber xq = pts[q].first + CycNumber(t) * pts[q].second;
                    if (xp == xq) ok = false;
                }
            }
        }
        if (!ok) continue;

        AffineArrangement aa;
        aa.lines = std::move(lines);
        aa.infinity_line = infinity_index;
        aa.d = d;
        // parallel classes = slope classes with at least two members
        std::vector<bool> used(aa.lines.size(), false);
        for (size_t i = 0; i < aa.lines.size(); ++i) {
            if (used[i]) continue;
            std::vector<int> cls = {aa.lines[i].line};
            for (size_t j = i + 1; j < aa.lines.size(); ++j) {
                if (!used[j] && aa.lines[i].slope == aa.lines[j].slope) {
                    cls.push_back(aa.lines[j].line);
                    used[j] = true;
                }
            }
            if (cls.size() >= 2) aa.parallel_classes.push_back(std::move(cls));
        }
        return aa;
    }
    throw GenericityFailure("shear search exhausted while deconing");
}

// ---------------------------------------------------------------------------
// braid words
// ---------------------------------------------------------------------------

std::vector<int> BraidWord::permutation() const {
    std::vector<int> order(strands);
    std::iota(order.begin(), order.end(), 0);
    for (int letter : letters) {
        int k = std::abs(letter) - 1;
        std::swap(order[k], order[k + 1]);
    }
    std::vector<int> perm(strands);
    for (int p = 0; p < strands; ++p) perm[order[p]] = p;
    // order[final position] = initial position; perm maps initial -> final
    return perm;
}

bool BraidWord::is_pure() const {
    auto p = permutation();
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

long BraidWord::exponent_sum() const {
    long s = 0;
    for (int letter : letters) s += letter > 0 ? 1 : -1;
    return s;
}

// ---------------------------------------------------------------------------
// exact strand tracking
// ---------------------------------------------------------------------------

namespace {

CycNumber cplx(const Rational& re, const Rational& im) {
    return CycNumber(re) + CycNumber(im) * CycNumber::zeta(4);
}

// coordinate of w in direction u
CycNumber proj_dir(const CycNumber& u, const CycNumber& w) { return (u.conj() * w).real_part(); }

std::vector<long> primes_from_7(size_t count) {
    std::vector<long> primes;
    long n = 7;
    while (primes.size() < count) {
        bool prime = true;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(n);
        ++n;
    }
    return primes;
}

CycNumber direction(int index) {
    if (index == 0) return CycNumber(1);
    static const std::vector<long> primes = primes_from_7(64);
    if (index > static_cast<int>(primes.size()))
        throw GenericityFailure("projection direction sequence exhausted");
    return CycNumber(1) + CycNumber::zeta(4) * CycNumber(Rational(1, primes[index - 1]));
}

struct Tie {}; // restart with the next projection direction

struct Tracker {
    const std::vector<AffineLine>& lines;
    CycNumber u, u_orth;
    std::vector<int> order; // position -> strand
    std::vector<int> pos;   // strand -> position
    std::vector<int> word;

    Tracker(const std::vector<AffineLine>& l, const CycNumber& dir)
        : lines(l), u(dir), u_orth(dir * CycNumber::zeta(4)) {}

    CycNumber strand_at(size_t i, const CycNumber& x) const {
        return lines[i].slope * x + lines[i].intercept;
    }

    void init(const CycNumber& x0) {
        const size_t n = lines.size();
        std::vector<CycNumber> val(n);
        for (size_t i = 0; i < n; ++i) val[i] = proj_dir(u, strand_at(i, x0));
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        for (size_t i = 1; i < n; ++i) { // insertion sort with exact comparisons
            int s = order[i];
            size_t j = i;
            while (j > 0) {
                int c = compare_real(val[order[j - 1]], val[s]);
                if (c == 0) throw Tie{};
                if (c < 0) break;
                order[j] = order[j - 1];
                --j;
            }
            order[j] = s;
        }
        pos.assign(n, 0);
        for (size_t p = 0; p < n; ++p) pos[order[p]] = static_cast<int>(p);
        word.clear();
    }

    void run_segment(const CycNumber& from, const CycNumber& to) {
        const size_t n = lines.size();
        CycNumber delta = to - from;
        std::vector<CycNumber> a(n), b(n);
        for (size_t i = 0; i < n; ++i) {
            a[i] = proj_dir(u, strand_at(i, from));
            b[i] = proj_dir(u, lines[i].slope * delta);
        }
        std::vector<Crossing> crossings;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                CycNumber db = b[i] - b[j];
                CycNumber da = a[j] - a[i];
                if (db.is_zero()) {
                    if (da.is_zero()) throw Tie{}; // projections coincide along the segment
                    continue;
                }
                CycNumber t = da / db;
                int s0 = sign_real(t);
                if (s0 == 0) throw Tie{}; // crossing at a path vertex
                if (s0 < 0) continue;
                int s1 = sign_real(t - CycNumber(1));
                if (s1 == 0) throw Tie{};
                if (s1 > 0) continue;
                crossings.push_back({t, static_cast<int>(i), static_cast<int>(j)});
            }
        }
        std::sort(crossings.begin(), crossings.end(), [](const Crossing& x, const Crossing& y) {
            int c = compare_real(x.t, y.t);
            if (c != 0) return c < 0;
            return std::make_pair(std::min(x.i, x.j), std::max(x.i, x.j)) <
                   std::make_pair(std::min(y.i, y.j), std::max(y.i, y.j));
        });
        for (size_t e = 0; e < crossings.size();) {
            size_t e2 = e;
            while (e2 < crossings.size() && compare_real(crossings[e].t, crossings[e2].t) == 0)
                ++e2;
            process_simultaneous(crossings.data() + e, e2 - e, from, delta);
            e = e2;
        }
    }

    struct Crossing {
        CycNumber t;
        int i, j;
    };

    void emit_swap(int lower, const CycNumber& x_at) {
        int sa = order[lower], sb = order[lower + 1];
        CycNumber side = proj_dir(u_orth, strand_at(sa, x_at) - strand_at(sb, x_at));
        int s = sign_real(side);
        if (s == 0) throw InternalError("strands collide away from a critical value");
        word.push_back(-s * (lower + 1));
        std::swap(order[lower], order[lower + 1]);
        pos[sa] = lower + 1;
        pos[sb] = lower;
    }

    // Crossings sharing the same instant. Disjoint clusters commute; a
    // cluster of m strands must be a rigid alignment (all differences real
    // multiples of one another), in which case it contributes a half twist,
    // emitted as a bubble reversal of the contiguous position block.
    void process_simultaneous(const Crossing* cs, size_t count, const CycNumber& from,
                              const CycNumber& delta) {
        CycNumber x_at = from + cs[0].t * delta;
        if (count == 1) {
            int pi = pos[cs[0].i], pj = pos[cs[0].j];
            if (std::abs(pi - pj) != 1) throw Tie{};
            emit_swap(std::min(pi, pj), x_at);
            return;
        }
        // cluster the strands by shared crossings
        std::map<int, int> cluster_of;
        std::vector<std::vector<int>> clusters;
        for (size_t e = 0; e < count; ++e) {
            int ci = cluster_of.count(cs[e].i) ? cluster_of[cs[e].i] : -1;
            int cj = cluster_of.count(cs[e].j) ? cluster_of[cs[e].j] : -1;
            if (ci < 0 && cj < 0) {
                cluster_of[cs[e].i] = cluster_of[cs[e].j] = static_cast<int>(clusters.size());
                clusters.push_back({cs[e].i, cs[e].j});
            } else if (ci < 0) {
                cluster_of[cs[e].i] = cj;
                clusters[cj].push_back(cs[e].i);
            } else if (cj < 0) {
                cluster_of[cs[e].j] = ci;
                clusters[ci].push_back(cs[e].j);
            } else if (ci != cj) {
                for (int s : clusters[cj]) {
                    cluster_of[s] = ci;
                    clusters[ci].push_back(s);
                }
                clusters[cj].clear();
            }
        }
        // order clusters by position for deterministic emission
        std::vector<std::vector<int>> blocks;
        for (auto& cl : clusters)
            if (!cl.empty()) blocks.push_back(std::move(cl));
        for (auto& block : blocks)
            std::sort(block.begin(), block.end(),
                      [&](int a, int b) { return pos[a] < pos[b]; });
        std::sort(blocks.begin(), blocks.end(),
                  [&](const auto& a, const auto& b) { return pos[a[0]] < pos[b[0]]; });

        for (const auto& block : blocks) {
            size_t m = block.size();
            // every pair of the cluster must cross here
            size_t pairs_here = 0;
            for (size_t e = 0; e < count; ++e)
                if (cluster_of[cs[e].i] == cluster_of[cs[e].j] &&
                    std::find(block.begin(), block.end(), cs[e].i) != block.end())
                    ++pairs_here;
            if (pairs_here != m * (m - 1) / 2) throw Tie{};
            // contiguous positions
            for (size_t r = 1; r < m; ++r)
                if (pos[block[r]] != pos[block[r - 1]] + 1) throw Tie{};
            // rigidity: differences and velocities proportional by real ratios
            int i0 = block[0], j0 = block[1];
            CycNumber d0 = strand_at(i0, x_at) - strand_at(j0, x_at);
            CycNumber v0 = (lines[i0].slope - lines[j0].slope) * delta;
            for (size_t r = 0; r < m; ++r) {
                for (size_t s = r + 1; s < m; ++s) {
                    CycNumber dij = strand_at(block[r], x_at) - strand_at(block[s], x_at);
                    CycNumber vij = (lines[block[r]].slope - lines[block[s]].slope) * delta;
                    CycNumber lambda = dij / d0;
                    if (!lambda.is_real() || lambda * v0 != vij) throw Tie{};
                }
            }
            // bubble reversal: each pair swaps once with its exact side sign
            int base = pos[block[0]];
            int sign_seen = 0;
            for (size_t pass = 0; pass + 1 < m; ++pass) {
                for (int idx = base; idx < base + static_cast<int>(m) - 1 - static_cast<int>(pass);
                     ++idx) {
                    size_t before = word.size();
                    emit_swap(idx, x_at);
                    int s = word[before] > 0 ? 1 : -1;
                    if (sign_seen == 0) sign_seen = s;
                    if (s != sign_seen)
                        throw InternalError("rigid alignment with incoherent crossing sides");
                }
            }
        }
    }
};

void free_reduce(std::vector<int>& word) {
    std::vector<int> out;
    for (int letter : word) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    word = std::move(out);
}

struct Box {
    Rational re_lo, re_hi, im_lo, im_hi;
};

} // namespace

std::vector<AffinePoint> affine_points(const AffineArrangement& aa) {
    const size_t n = aa.lines.size();
    std::vector<AffinePoint> pts;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (aa.lines[i].slope == aa.lines[j].slope) continue;
            CycNumber x = (aa.lines[j].intercept - aa.lines[i].intercept) /
                          (aa.lines[i].slope - aa.lines[j].slope);
            CycNumber y = aa.lines[i].slope * x + aa.lines[i].intercept;
            bool found = false;
            for (auto& p : pts) {
                if (p.x == x) {
                    if (p.y != y) throw InternalError("two intersection points share an x-coordinate");
                    for (int l : {aa.lines[i].line, aa.lines[j].line})
                        if (std::find(p.lines.begin(), p.lines.end(), l) == p.lines.end())
                            p.lines.push_back(l);
                    found = true;
                    break;
                }
            }
            if (!found) pts.push_back({x, y, {aa.lines[i].line, aa.lines[j].line}});
        }
    }
    for (auto& p : pts) std::sort(p.lines.begin(), p.lines.end());
    std::sort(pts.begin(), pts.end(), [](const AffinePoint& a, const AffinePoint& b) {
        int c = compare_real(a.x.real_part(), b.x.real_part());
        if (c != 0) return c < 0;
        return compare_real(a.x.imag_part(), b.x.imag_part()) < 0;
    });
    return pts;
}

MonodromyData braid_monodromy(const AffineArrangement& aa, const BraidOptions& opts) {
    const size_t n = aa.lines.size();
    MonodromyData data;
    data.strands = static_cast<int>(n);
    if (n == 0) {
        data.basepoint = CycNumber(0);
        return data;
    }

    std::vector<AffinePoint> pts = affine_points(aa);

    if (pts.empty()) {
        // parallel or single-line fibers: no critical values, but the strand
        // order at the basepoint is still part of the data
        data.basepoint = cplx(Rational(-1) - opts.extra_left, Rational(-1) - opts.extra_below);
        for (int attempt = opts.first_direction; attempt < opts.first_direction + 48; ++attempt) {
            try {
                Tracker tracker(aa.lines, direction(attempt));
                tracker.init(data.basepoint);
                for (int strand : tracker.order)
                    data.strand_lines.push_back(aa.lines[strand].line);
                return data;
            } catch (const Tie&) {
                continue;
            }
        }
        throw GenericityFailure("projection direction search exhausted");
    }

    // rational boxes around the critical values, refined until separated
    std::vector<Box> boxes(pts.size());
    for (int prec = 64;; prec *= 2) {
        if (prec > (1 << 20)) throw InternalError("critical-value box refinement failed");
        for (size_t p = 0; p < pts.size(); ++p) {
            auto re = rational_bounds(pts[p].x.real_part(), prec);
            auto im = rational_bounds(pts[p].x.imag_part(), prec);
            boxes[p] = {re.first, re.second, im.first, im.second};
        }
        bool ok = true;
        for (size_t p = 0; p < pts.size() && ok; ++p) {
            for (size_t q = p + 1; q < pts.size() && ok; ++q) {
                if (pts[p].x.real_part() == pts[q].x.real_part()) {
                    ok = boxes[p].im_hi < boxes[q].im_lo || boxes[q].im_hi < boxes[p].im_lo;
                } else {
                    ok = boxes[p].re_hi < boxes[q].re_lo || boxes[q].re_hi < boxes[p].re_lo;
                }
            }
        }
        if (ok) break;
    }

    // columns of equal real part, in sorted order
    struct Column {
        Rational lo, hi;          // real-part envelope
        std::vector<size_t> members; // point indices, increasing imaginary part
    };
    std::vector<Column> columns;
    for (size_t p = 0; p < pts.size(); ++p) {
        if (!columns.empty() &&
            pts[columns.back().members[0]].x.real_part() == pts[p].x.real_part()) {
            auto& col = columns.back();
            col.members.push_back(p);
            col.lo = std::max(col.lo, boxes[p].re_lo);
            col.hi = std::min(col.hi, boxes[p].re_hi);
        } else {
            columns.push_back({boxes[p].re_lo, boxes[p].re_hi, {p}});
        }
    }

    std::vector<Rational> sep(columns.size() + 1);
    sep[0] = columns.front().lo - 1;
    for (size_t j = 1; j < columns.size(); ++j) sep[j] = (columns[j - 1].hi + columns[j].lo) / 2;
    sep[columns.size()] = columns.back().hi + 1;

    Rational y0 = boxes[0].im_lo;
    for (const auto& b : boxes) y0 = std::min(y0, b.im_lo);
    y0 -= 1 + opts.extra_below;
    Rational x_left = sep[0] - 1 - opts.extra_left;
    CycNumber basepoint = cplx(x_left, y0);

    for (int attempt = opts.first_direction; attempt < opts.first_direction + 48; ++attempt) {
        try {
            Tracker tracker(aa.lines, direction(attempt));
            tracker.init(basepoint);
            data.basepoint = basepoint;
            data.strand_lines.clear();
            for (int strand : tracker.order) data.strand_lines.push_back(aa.lines[strand].line);
            data.events.clear();

            for (size_t j = 0; j < columns.size(); ++j) {
                const auto& col = columns[j];
                Rational g = (sep[j] + col.lo) / 2;
                Rational w = (col.hi + sep[j + 1]) / 2;
                for (size_t m = 0; m < col.members.size(); ++m) {
                    size_t p = col.members[m];
                    Rational below =
                        (m == 0) ? Rational((y0 + boxes[p].im_lo) / 2)
                                 : Rational((boxes[col.members[m - 1]].im_hi + boxes[p].im_lo) / 2);
                    Rational above =
                        (m + 1 == col.members.size())
                            ? Rational(boxes[p].im_hi + 1)
                            : Rational((boxes[p].im_hi + boxes[col.members[m + 1]].im_lo) / 2);
                    size_t word_start = tracker.word.size();
                    std::vector<CycNumber> route = {
                        basepoint,          cplx(g, y0),    cplx(g, below), cplx(w, below),
                        cplx(w, above),     cplx(g, above), cplx(g, below), cplx(g, y0),
                        basepoint};
                    for (size_t s = 0; s + 1 < route.size(); ++s)
                        tracker.run_segment(route[s], route[s + 1]);

                    MonodromyEvent event;
                    event.point = pts[p];
                    event.braid.strands = static_cast<int>(n);
                    event.braid.letters.assign(tracker.word.begin() + word_start,
                                               tracker.word.end());
                    free_reduce(event.braid.letters);
                    if (!event.braid.is_pure())
                        throw InternalError("lasso braid does not restore strand order");
                    data.events.push_back(std::move(event));
                    tracker.word.resize(word_start);
                }
            }
            return data;
        } catch (const Tie&) {
            continue;
        }
    }
    throw GenericityFailure("projection direction search exhausted");
}

} // namespace arrangetop
