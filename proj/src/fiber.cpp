#include "arrangetop/fiber.hpp"

#include <algorithm>
#include <map>

#include "arrangetop/parallel.hpp"

namespace arrangetop {

namespace {

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

// Artin action of one braid letter on a free-group word (generators are
// 1-based in both alphabets).
std::vector<int> apply_braid_letter(const std::vector<int>& word, int letter) {
    int k = std::abs(letter);
    std::vector<int> out;
    out.reserve(word.size() * 2);
    auto append = [&](std::initializer_list<int> xs) {
        for (int x : xs) out.push_back(x);
    };
    for (int w : word) {
        int g = std::abs(w);
        bool inv = w < 0;
        if (letter > 0 && g == k) {
            // x_k -> x_k x_{k+1} x_k^{-1}
            if (!inv)
                append({k, k + 1, -k});
            else
                append({k, -(k + 1), -k});
        } else if (letter > 0 && g == k + 1) {
            // x_{k+1} -> x_k
            out.push_back(inv ? -k : k);
        } else if (letter < 0 && g == k) {
            // x_k -> x_{k+1}
            out.push_back(inv ? -(k + 1) : k + 1);
        } else if (letter < 0 && g == k + 1) {
            // x_{k+1} -> x_{k+1}^{-1} x_k x_{k+1}
            if (!inv)
                append({-(k + 1), k, k + 1});
            else
                append({-(k + 1), -k, k + 1});
        } else {
            out.push_back(w);
        }
    }
    free_reduce(out);
    return out;
}

std::vector<int> braid_image(const BraidWord& braid, int generator) {
    std::vector<int> word = {generator};
    for (int letter : braid.letters) word = apply_braid_letter(word, letter);
    return word;
}

} // namespace

GroupPresentation zvk_presentation(const MonodromyData& md, long euler_characteristic) {
    GroupPresentation pres;
    pres.n = md.strands;
    pres.generator_lines = md.strand_lines;

    // basepoint position of each original line
    std::map<int, int> position_of_line;
    for (size_t p = 0; p < md.strand_lines.size(); ++p)
        position_of_line[md.strand_lines[p]] = static_cast<int>(p);

    for (const auto& event : md.events) {
        // relators for the strands through the point, dropping the one at
        // the largest basepoint position
        std::vector<int> positions;
        for (int line : event.point.lines) positions.push_back(position_of_line.at(line));
        std::sort(positions.begin(), positions.end());
        positions.pop_back();
        for (int p : positions) {
            std::vector<int> relator = braid_image(event.braid, p + 1);
            relator.push_back(-(p + 1));
            free_reduce(relator);
            pres.relators.push_back(std::move(relator));
        }
    }

    long audit = 1 - static_cast<long>(pres.n) + static_cast<long>(pres.relators.size());
    if (audit != euler_characteristic)
        throw InternalError("presentation fails the Euler characteristic audit");
    return pres;
}

Character character(long d, long exponent) {
    Character chi;
    chi.d = d;
    chi.exponent = ((exponent % d) + d) % d;
    chi.lambda = chi.exponent == 0 ? CycNumber(1) : CycNumber::zeta(d, chi.exponent);
    return chi;
}

CycMatrix fox_jacobian(const GroupPresentation& p, const Character& chi) {
    CycMatrix jac(p.relators.size(), p.n);
    for (size_t r = 0; r < p.relators.size(); ++r) {
        long cum = 0; // prefix exponent sum; the character value is lambda^cum
        for (int letter : p.relators[r]) {
            int g = std::abs(letter) - 1;
            if (letter > 0) {
                jac.at(r, g) += chi.lambda.pow(cum);
                ++cum;
            } else {
                --cum;
                jac.at(r, g) -= chi.lambda.pow(cum);
            }
        }
    }
    return jac;
}

int local_system_h1(const GroupPresentation& p, const Character& chi) {
    size_t rank = fox_jacobian(p, chi).rank_kernel().rank;
    int drop = chi.exponent == 0 ? 0 : 1;
    return p.n - static_cast<int>(rank) - drop;
}

GroupPresentation complement_presentation(const Arrangement& a, int infinity_index,
                                          const BraidOptions& opts) {
    int inf = infinity_index == 0 ? static_cast<int>(a.size()) : infinity_index;
    MonodromyData md = braid_monodromy(decone(a, inf), opts);
    return zvk_presentation(md, a.euler_complement());
}

Spectrum milnor_spectrum(const Arrangement& a, int infinity_index, const BraidOptions& opts) {
    const long d = static_cast<long>(a.size());
    GroupPresentation pres = complement_presentation(a, infinity_index, opts);

    Spectrum spect;
    spect.d = d;
    spect.monodromy_order = d;
    spect.dims.assign(d, 0);
    parallel_for(static_cast<size_t>(d), [&](size_t e) {
        spect.dims[e] = local_system_h1(pres, character(d, static_cast<long>(e)));
    });
    for (int dim : spect.dims) spect.b1F += dim;

    // structural audits
    if (spect.dims[0] != d - 1)
        throw InternalError("eigenvalue-1 dimension disagrees with b_1 of the complement");
    for (long e = 1; e < d; ++e)
        if (spect.dims[e] != spect.dims[d - e])
            throw InternalError("spectrum is not conjugation symmetric");
    return spect;
}

bool spectrum_crosscheck(const Arrangement& a, int infinity_index) {
    const long d = static_cast<long>(a.size());
    Spectrum spect = milnor_spectrum(a, infinity_index);
    GroupPresentation pres = complement_presentation(a, infinity_index);

    const long n = pres.n;
    const long s = static_cast<long>(pres.relators.size());

    // chain complex of the d-fold cyclic cover of the presentation complex:
    // cells are lifted by the deck shift, every generator advancing the
    // sheet by one
    CycMatrix d1(static_cast<size_t>(n * d), static_cast<size_t>(d));
    for (long i = 0; i < n; ++i) {
        for (long t = 0; t < d; ++t) {
            d1.at(i * d + t, (t + 1) % d) += CycNumber(1);
            d1.at(i * d + t, t) -= CycNumber(1);
        }
    }
    CycMatrix d2(static_cast<size_t>(s * d), static_cast<size_t>(n * d));
    for (long r = 0; r < s; ++r) {
        for (long t = 0; t < d; ++t) {
            long cum = 0;
            for (int letter : pres.relators[r]) {
                long g = std::abs(letter) - 1;
                if (letter > 0) {
                    long sheet = ((t + cum) % d + d) % d;
                    d2.at(r * d + t, g * d + sheet) += CycNumber(1);
                    ++cum;
                } else {
                    --cum;
                    long sheet = ((t + cum) % d + d) % d;
                    d2.at(r * d + t, g * d + sheet) -= CycNumber(1);
                }
            }
        }
    }

    size_t rank1 = d1.rank_kernel().rank;
    if (rank1 != static_cast<size_t>(d - 1) && n > 0)
        throw InternalError("cover of the presentation complex is not connected");
    size_t rank2 = d2.rank_kernel().rank;
    long b1_cover = n * d - static_cast<long>(rank1) - static_cast<long>(rank2);
    return b1_cover == spect.b1F;
}

} // namespace arrangetop
