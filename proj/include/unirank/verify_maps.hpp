#ifndef UNIRANK_VERIFY_MAPS_HPP
#define UNIRANK_VERIFY_MAPS_HPP

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unirank/maps.hpp"
#include "unirank/parallel.hpp"
#include "unirank/sets.hpp"

namespace unirank {

enum class MapName {
    rho, phi1, phi2, Phi, psi1, psi2, psi3, Psi,
    chi1, chi2, chi3, chi4, chi5, chi6, chi7, chi8,
    eta1, eta2, kappa1, kappa2
};

enum class MapDirection { forward, inverse };

struct MapId {
    MapName name;
    MapDirection direction = MapDirection::forward;
};

inline const char* map_name_str(MapName m) {
    switch (m) {
        case MapName::rho: return "rho";
        case MapName::phi1: return "phi1";
        case MapName::phi2: return "phi2";
        case MapName::Phi: return "Phi";
        case MapName::psi1: return "psi1";
        case MapName::psi2: return "psi2";
        case MapName::psi3: return "psi3";
        case MapName::Psi: return "Psi";
        case MapName::chi1: return "chi1";
        case MapName::chi2: return "chi2";
        case MapName::chi3: return "chi3";
        case MapName::chi4: return "chi4";
        case MapName::chi5: return "chi5";
        case MapName::chi6: return "chi6";
        case MapName::chi7: return "chi7";
        case MapName::chi8: return "chi8";
        case MapName::eta1: return "eta1";
        case MapName::eta2: return "eta2";
        case MapName::kappa1: return "kappa1";
        case MapName::kappa2: return "kappa2";
    }
    return "?";
}

enum class FailureKind {
    ill_defined, weight_changed, not_in_target, collision, roundtrip_broken
};

inline const char* failure_kind_str(FailureKind k) {
    switch (k) {
        case FailureKind::ill_defined: return "ill-defined";
        case FailureKind::weight_changed: return "weight-changed";
        case FailureKind::not_in_target: return "not-in-target";
        case FailureKind::collision: return "collision";
        case FailureKind::roundtrip_broken: return "roundtrip-broken";
    }
    return "?";
}

struct MapFailure {
    int n = 0;
    Partition input;
    FailureKind kind = FailureKind::ill_defined;
    std::string detail;
};

/// Evidence gathered while mechanically checking one map over a weight
/// range: the map must be defined on its whole domain, preserve weight,
/// land in the declared target block, stay collision-free, and be undone
/// by the declared inverse. For bijections, image and target counts must
/// agree weight by weight. Empty `failures` means verified.
struct VerificationReport {
    std::string map_name;
    int n_lo = 0, n_hi = 0;
    long long domain_count = 0;
    long long image_count = 0;
    long long target_count = 0;  // only populated for bijections
    bool bijective_claim = false;
    std::vector<MapFailure> failures;
    std::vector<std::string> notes;

    bool verified() const { return failures.empty(); }
};

namespace detail {

struct MapCase {
    int min_weight = 1;
    bool bijective = false;
    std::function<bool(const Partition&)> domain;
    std::function<Partition(const Partition&)> forward;
    // validates the image given the preimage (block and sub-block respect)
    std::function<bool(const Partition&, const Partition&)> target_ok;
    std::function<Partition(const Partition&)> inverse;
    // bijections additionally count the full target set per weight
    std::function<bool(const Partition&)> target_member;
};

inline MapCase map_case(MapName name, int m) {
    auto needs_m = [&](const char* who) {
        if (m < 1)
            throw std::invalid_argument(std::string(who) +
                                        " requires the rectangle parameter m >= 1");
    };
    MapCase c;
    switch (name) {
        case MapName::rho:
            c.bijective = true;
            c.domain = [](const Partition& p) { return in_A1(p); };
            c.forward = [](const Partition& p) { return rho(p); };
            c.target_ok = [](const Partition&, const Partition& out) { return in_B1(out); };
            c.inverse = [](const Partition& p) { return rho_inv(p); };
            c.target_member = [](const Partition& p) { return in_B1(p); };
            break;
        case MapName::phi1:
            needs_m("phi1");
            c.bijective = true;  // V1(m+1, n) coincides with U1(m, n)
            c.domain = [m](const Partition& p) { return in_V(p, m + 1) && v_block(p, m + 1) == 1; };
            c.forward = [](const Partition& p) { return p; };
            c.target_ok = [m](const Partition&, const Partition& out) { return in_U1_m(out, m); };
            c.inverse = [](const Partition& p) { return p; };
            c.target_member = [m](const Partition& p) { return in_U1_m(p, m); };
            break;
        case MapName::phi2:
            needs_m("phi2");
            c.domain = [m](const Partition& p) { return in_V(p, m + 1) && v_block(p, m + 1) == 2; };
            c.forward = [m](const Partition& p) { return phi2(p, m); };
            c.target_ok = [m](const Partition&, const Partition& out) { return in_U2_m(out, m); };
            c.inverse = [m](const Partition& p) { return phi2_inv(p, m); };
            break;
        case MapName::Phi:
            needs_m("Phi");
            c.domain = [m](const Partition& p) { return in_V(p, m + 1); };
            c.forward = [m](const Partition& p) { return Phi(p, m); };
            c.target_ok = [m](const Partition& in, const Partition& out) {
                return v_block(in, m + 1) == 1 ? in_U1_m(out, m) : in_U2_m(out, m);
            };
            c.inverse = nullptr;  // block-dependent; rebuilt below
            break;
        case MapName::psi1:
            c.bijective = true;  // V1(1, n) coincides with U1(0, n)
            c.domain = [](const Partition& p) { return in_V(p, 1) && v_block(p, 1) == 1; };
            c.forward = [](const Partition& p) { return p; };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 1;
            };
            c.inverse = [](const Partition& p) { return p; };
            c.target_member = [](const Partition& p) { return in_U(p, 0) && u0_block(p) == 1; };
            break;
        case MapName::psi2:
            c.bijective = true;
            c.domain = [](const Partition& p) { return in_V(p, 1) && v_block(p, 1) == 2; };
            c.forward = [](const Partition& p) { return psi2(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 2;
            };
            c.inverse = [](const Partition& p) { return psi2_inv(p); };
            c.target_member = [](const Partition& p) { return in_U(p, 0) && u0_block(p) == 2; };
            break;
        case MapName::psi3:
            c.domain = [](const Partition& p) { return in_V(p, 1) && v_block(p, 1) == 3; };
            c.forward = [](const Partition& p) { return psi3(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 3;
            };
            c.inverse = [](const Partition& p) { return psi3_inv(p); };
            break;
        case MapName::Psi:
            c.domain = [](const Partition& p) { return in_V(p, 1); };
            c.forward = [](const Partition& p) { return Psi(p); };
            c.target_ok = [](const Partition& in, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == v_block(in, 1);
            };
            c.inverse = nullptr;
            break;
        case MapName::chi1:
            c.bijective = true;  // P1(0, n) coincides with U5(0, n)
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 1; };
            c.forward = [](const Partition& p) { return chi1(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 5;
            };
            c.inverse = [](const Partition& p) { return zeta1(p); };
            c.target_member = [](const Partition& p) { return in_U(p, 0) && u0_block(p) == 5; };
            break;
        case MapName::chi2:
            c.bijective = true;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 2; };
            c.forward = [](const Partition& p) { return chi2(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 5;
            };
            c.inverse = [](const Partition& p) { return zeta2(p); };
            c.target_member = [](const Partition& p) { return in_U(p, 0) && u0_block(p) == 5; };
            break;
        case MapName::chi3:
            c.min_weight = 4;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 3; };
            c.forward = [](const Partition& p) { return chi3(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 4;
            };
            c.inverse = [](const Partition& p) { return zeta3(p); };
            break;
        case MapName::chi4:
            c.min_weight = 6;
            c.domain = [](const Partition& p) {
                if (!in_P0(p)) return false;
                const int b = p_block(p);
                return b == 4 || b == 7;
            };
            c.forward = [](const Partition& p) { return chi4(p); };
            c.target_ok = [](const Partition& in, const Partition& out) {
                if (!in_U(out, 0) || u0_block(out) != 4) return false;
                return u4_sub_block(out) == (p_block(in) == 4 ? 1 : 2);
            };
            c.inverse = [](const Partition& p) { return zeta4(p); };
            break;
        case MapName::chi5:
            c.min_weight = 9;
            c.domain = [](const Partition& p) {
                if (!in_P0(p)) return false;
                const int b = p_block(p);
                return b == 5 || b == 6;
            };
            c.forward = [](const Partition& p) { return chi5(p); };
            c.target_ok = [](const Partition& in, const Partition& out) {
                if (!in_U(out, 0) || u0_block(out) != 5) return false;
                return u5_sub_block(out) == (p_block(in) == 5 ? 1 : 2);
            };
            c.inverse = [](const Partition& p) { return zeta5(p); };
            break;
        case MapName::chi6:
            c.min_weight = 5;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 8; };
            c.forward = [](const Partition& p) { return chi6(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 4;
            };
            c.inverse = [](const Partition& p) { return zeta6(p); };
            break;
        case MapName::chi7:
            c.min_weight = 7;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 9; };
            c.forward = [](const Partition& p) { return chi7(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 4;
            };
            c.inverse = [](const Partition& p) { return zeta7(p); };
            break;
        case MapName::chi8:
            c.min_weight = 10;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 10; };
            c.forward = [](const Partition& p) { return chi8(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 5;
            };
            c.inverse = [](const Partition& p) { return zeta8(p); };
            break;
        case MapName::eta1:
            c.min_weight = 6;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 4; };
            c.forward = [](const Partition& p) { return eta1(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 4 && u4_sub_block(out) == 1;
            };
            c.inverse = [](const Partition& p) { return zeta4_1(p); };
            break;
        case MapName::eta2:
            c.min_weight = 6;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 7; };
            c.forward = [](const Partition& p) { return eta2(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 4 && u4_sub_block(out) == 2;
            };
            c.inverse = [](const Partition& p) { return zeta4_2(p); };
            break;
        case MapName::kappa1:
            c.min_weight = 9;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 5; };
            c.forward = [](const Partition& p) { return kappa1(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 5 && u5_sub_block(out) == 1;
            };
            c.inverse = [](const Partition& p) { return zeta5_1(p); };
            break;
        case MapName::kappa2:
            c.min_weight = 9;
            c.domain = [](const Partition& p) { return in_P0(p) && p_block(p) == 6; };
            c.forward = [](const Partition& p) { return kappa2(p); };
            c.target_ok = [](const Partition&, const Partition& out) {
                return in_U(out, 0) && u0_block(out) == 5 && u5_sub_block(out) == 2;
            };
            c.inverse = [](const Partition& p) { return zeta5_2(p); };
            break;
    }
    return c;
}

}  // namespace detail

/* Exhaustively checks one map over every weight in [n_lo, n_hi]: for each
 * domain element the image must exist, keep the weight, satisfy the target
 * predicate, avoid collisions within the weight class, and return to the
 * input under the inverse (when one is declared). Runs weights in parallel;
 * the merged report is deterministic. */
inline VerificationReport verify_map(MapName name, int n_lo, int n_hi, int m = 0,
                                     int threads = 1) {
    detail::MapCase mc = detail::map_case(name, m);
    VerificationReport rep;
    rep.map_name = map_name_str(name);
    if (name == MapName::phi1 || name == MapName::phi2 || name == MapName::Phi)
        rep.map_name += "(m=" + std::to_string(m) + ")";
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.bijective_claim = mc.bijective;

    const int lo = std::max(n_lo, mc.min_weight);
    if (lo > n_lo)
        rep.notes.push_back("weights below " + std::to_string(mc.min_weight) +
                            " excluded (below the map's threshold)");

    struct PerWeight {
        long long domain = 0, image = 0, target = 0;
        std::vector<MapFailure> failures;
    };
    std::vector<PerWeight> slots(static_cast<std::size_t>(std::max(0, n_hi - lo + 1)));

    parallel_for(lo, n_hi, threads, [&](int n) {
        PerWeight& slot = slots[static_cast<std::size_t>(n - lo)];
        std::vector<Partition> images;
        std::vector<Partition> inputs;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition lambda = Partition::unchecked(std::vector<int>(parts));
            if (mc.target_member && mc.target_member(lambda)) slot.target++;
            if (!mc.domain(lambda)) return;
            slot.domain++;
            Partition out;
            try {
                out = mc.forward(lambda);
            } catch (const std::exception& e) {
                slot.failures.push_back({n, lambda, FailureKind::ill_defined, e.what()});
                return;
            }
            if (out.weight() != n) {
                slot.failures.push_back({n, lambda, FailureKind::weight_changed,
                                         "image " + out.to_string()});
                return;
            }
            if (!mc.target_ok(lambda, out)) {
                slot.failures.push_back({n, lambda, FailureKind::not_in_target,
                                         "image " + out.to_string()});
                return;
            }
            std::function<Partition(const Partition&)> inverse = mc.inverse;
            if (!inverse && name == MapName::Phi) {
                const int blk = v_block(lambda, m + 1);
                inverse = (blk == 1)
                              ? std::function<Partition(const Partition&)>(
                                    [](const Partition& p) { return p; })
                              : std::function<Partition(const Partition&)>(
                                    [m](const Partition& p) { return phi2_inv(p, m); });
            }
            if (!inverse && name == MapName::Psi) {
                const int blk = v_block(lambda, 1);
                inverse = [blk](const Partition& p) {
                    if (blk == 1) return p;
                    return blk == 2 ? psi2_inv(p) : psi3_inv(p);
                };
            }
            if (inverse) {
                try {
                    if (inverse(out) != lambda) {
                        slot.failures.push_back({n, lambda, FailureKind::roundtrip_broken,
                                                 "image " + out.to_string()});
                        return;
                    }
                } catch (const std::exception& e) {
                    slot.failures.push_back(
                        {n, lambda, FailureKind::roundtrip_broken, e.what()});
                    return;
                }
            }
            images.push_back(std::move(out));
            inputs.push_back(std::move(lambda));
        });
        // collision scan within the weight class
        std::vector<std::size_t> order(images.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return images[a] < images[b];
        });
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (images[order[i]] == images[order[i - 1]]) {
                slot.failures.push_back({n, inputs[order[i]], FailureKind::collision,
                                         "collides with " +
                                             inputs[order[i - 1]].to_string() +
                                             " at image " +
                                             images[order[i]].to_string()});
            }
        }
        slot.image += static_cast<long long>(images.size());
    });

    for (const auto& slot : slots) {
        rep.domain_count += slot.domain;
        rep.image_count += slot.image;
        rep.target_count += slot.target;
        for (const auto& f : slot.failures) rep.failures.push_back(f);
    }
    if (mc.bijective && rep.image_count != rep.target_count)
        rep.failures.push_back({0, Partition{}, FailureKind::not_in_target,
                                "bijection deficit: image count " +
                                    std::to_string(rep.image_count) +
                                    " != target count " +
                                    std::to_string(rep.target_count)});
    return rep;
}

/* ------------------------- golden examples ------------------------- */

/// A worked example pinned as a regression test: one concrete input with
/// its published image. Any formula-vs-example disagreement is reported;
/// the formula's output is kept in `actual`.
struct GoldenExample {
    std::string map;
    Partition input;
    Partition expected;
    Partition actual;
    bool forward_matches = false;
    bool roundtrip_ok = false;
    bool passed() const { return forward_matches && roundtrip_ok; }
};

inline std::vector<GoldenExample> run_golden_examples() {
    auto sym = [](std::vector<int> a, std::vector<int> b, int m, int j) {
        return assemble_symbol(Partition(std::move(a)), Partition(std::move(b)), m, j);
    };
    struct Case {
        std::string map;
        Partition in, out;
        std::function<Partition(const Partition&)> fwd, inv;
    };
    const std::vector<Case> cases = {
        {"phi2(m=2)",
         sym({5, 5, 3, 2, 2, 1}, {3, 3, 3, 2, 2, 2, 1, 1, 1}, 2, 3),
         sym({5, 3, 2, 1, 1}, {3, 3, 2, 2, 2, 1, 1, 1}, 2, 4),
         [](const Partition& p) { return phi2(p, 2); },
         [](const Partition& p) { return phi2_inv(p, 2); }},
        {"psi2",
         sym({5, 4, 4, 3, 2, 2}, {5, 3, 2, 2, 2, 1, 1, 1, 1}, 0, 5),
         sym({4, 4, 3, 2, 2}, {3, 2, 2, 2, 1, 1, 1}, 0, 6),
         [](const Partition& p) { return psi2(p); },
         [](const Partition& p) { return psi2_inv(p); }},
        {"psi3",
         sym({7, 6, 5, 3, 1}, {7, 7, 6, 6, 4, 3, 3, 2}, 0, 7),
         sym({6, 5, 3, 2, 2, 1}, {7, 6, 6, 4, 2, 1}, 0, 8),
         [](const Partition& p) { return psi3(p); },
         [](const Partition& p) { return psi3_inv(p); }},
        {"chi3",
         sym({5, 4, 4, 2, 2}, {5, 5, 3, 3, 1}, 0, 5),
         sym({4, 4, 4, 2, 2}, {5, 5, 3, 3, 1, 1}, 0, 5),
         [](const Partition& p) { return chi3(p); },
         [](const Partition& p) { return zeta3(p); }},
        {"eta1",
         sym({6, 6, 5, 3, 3, 2, 2, 1, 1}, {6, 6, 6, 5, 4, 2, 1, 1, 1}, 0, 6),
         sym({5, 5, 5, 3, 3, 2, 2, 1, 1}, {6, 6, 6, 5, 4, 2, 2, 1, 1, 1}, 0, 6),
         [](const Partition& p) { return eta1(p); },
         [](const Partition& p) { return zeta4_1(p); }},
        {"eta2",
         sym({2, 2, 2, 2, 2, 1, 1}, {2, 1, 1, 1, 1, 1, 1}, 0, 2),
         sym({2, 2, 1, 1, 1}, {3, 1, 1, 1, 1, 1}, 0, 3),
         [](const Partition& p) { return eta2(p); },
         [](const Partition& p) { return zeta4_2(p); }},
        {"kappa1",
         sym({6, 6, 6, 6, 5, 4, 3, 3, 1}, {6, 6, 5, 5, 4, 4, 2, 1, 1}, 0, 6),
         sym({6, 5, 5, 4, 4, 2, 1, 1}, {7, 6, 5, 4, 4, 3, 3, 1}, 0, 7),
         [](const Partition& p) { return kappa1(p); },
         [](const Partition& p) { return zeta5_1(p); }},
        {"kappa2",
         sym({2, 2, 2, 2, 2, 1, 1}, {2, 2, 2, 2, 1, 1, 1}, 0, 2),
         sym({2, 2, 1, 1, 1, 1}, {3, 2, 2, 1, 1, 1}, 0, 3),
         [](const Partition& p) { return kappa2(p); },
         [](const Partition& p) { return zeta5_2(p); }},
        {"chi6",
         sym({4, 3, 3, 2, 2, 1, 1}, {5, 4, 4, 3, 3, 2, 1}, 0, 6),
         sym({4, 4, 3, 3, 2, 2, 1, 1}, {5, 5, 4, 4, 3, 3, 2, 2, 1}, 0, 5),
         [](const Partition& p) { return chi6(p); },
         [](const Partition& p) { return zeta6(p); }},
        {"chi7",
         sym({6, 5, 5, 4, 4, 2, 1}, {4, 4, 4, 3, 3, 2, 1}, 0, 7),
         sym({5, 5, 5, 5, 4, 4, 2, 1, 1}, {6, 4, 4, 4, 3, 3, 2, 1, 1, 1}, 0, 6),
         [](const Partition& p) { return chi7(p); },
         [](const Partition& p) { return zeta7(p); }},
        {"chi8",
         sym({4, 4, 4, 4, 3, 2, 2}, {4, 4, 3, 2, 2, 2, 1}, 0, 5),
         sym({4, 4, 3, 2, 2, 2, 1}, {5, 4, 4, 3, 3, 2, 2}, 0, 5),
         [](const Partition& p) { return chi8(p); },
         [](const Partition& p) { return zeta8(p); }},
    };
    std::vector<GoldenExample> out;
    for (const auto& cs : cases) {
        GoldenExample g;
        g.map = cs.map;
        g.input = cs.in;
        g.expected = cs.out;
        try {
            g.actual = cs.fwd(cs.in);
            g.forward_matches = (g.actual == cs.out);
            g.roundtrip_ok = (cs.inv(g.actual) == cs.in);
        } catch (const std::exception&) {
            g.forward_matches = false;
            g.roundtrip_ok = false;
        }
        out.push_back(std::move(g));
    }
    return out;
}

/* ------------------------- explicit witnesses ---------------------- */

/// Witness element of U4(0, 2t) / U5(0, 2t+1) showing both escape blocks
/// are populated (they receive no image of Psi), so u(0,n) > u(1,n).
inline Partition psi_gap_witness(int n) {
    if (n < 6) throw std::invalid_argument("psi_gap_witness: needs n >= 6");
    if (n % 2 == 0) {
        const int t = n / 2;
        std::vector<int> a(static_cast<std::size_t>(t - 3), 1);
        std::vector<int> b{2};
        for (int i = 0; i < t - 3; ++i) b.push_back(1);
        return assemble_symbol(Partition::unchecked(std::move(a)),
                               Partition::unchecked(std::move(b)), 0, 2);
    }
    const int t = (n - 1) / 2;
    if (t < 3) throw std::invalid_argument("psi_gap_witness: needs n >= 7 when odd");
    std::vector<int> a(static_cast<std::size_t>(t - 2), 1);
    std::vector<int> b{2};
    for (int i = 0; i < t - 3; ++i) b.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, 2);
}

/// Witness element of U4(0, n) outside the image of chi6 for n >= 15: its
/// first column height is d'-2, while every chi6 image has d'-1. Makes the
/// count inequality #P8 < #U4 strict.
inline Partition chi6_strict_witness(int n) {
    if (n < 15) throw std::invalid_argument("chi6_strict_witness: needs n >= 15");
    if (n % 2 == 0) {
        const int t = n / 2;
        std::vector<int> a(static_cast<std::size_t>(t - 6), 1);
        std::vector<int> b{3};
        for (int i = 0; i < t - 6; ++i) b.push_back(1);
        return assemble_symbol(Partition::unchecked(std::move(a)),
                               Partition::unchecked(std::move(b)), 0, 3);
    }
    const int t = (n - 1) / 2;
    std::vector<int> a(static_cast<std::size_t>(t - 6), 1);
    std::vector<int> b{3, 2};
    for (int i = 0; i < t - 7; ++i) b.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, 3);
}

/// Witness element of U(m, n) outside U1(m, n) and U2(m, n) for
/// n >= (m+1)(m+2)/2, making u(m, n) > u(m+1, n) strict for m >= 1.
inline Partition phi_gap_witness(int m, int n) {
    const int base = (m + 1) * (m + 2) / 2;
    if (m < 1 || n < base)
        throw std::invalid_argument("phi_gap_witness: needs m >= 1, n >= (m+1)(m+2)/2");
    std::vector<int> a;
    for (int v = m - 1; v >= 1; --v) a.push_back(v);
    std::vector<int> b(static_cast<std::size_t>(m + (n - base)), 1);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), m, 1);
}

}  // namespace unirank

#endif  // UNIRANK_VERIFY_MAPS_HPP
