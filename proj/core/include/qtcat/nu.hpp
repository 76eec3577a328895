#ifndef QTCAT_NU_HPP
#define QTCAT_NU_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "qtcat/partition.hpp"

namespace qtcat {

/// nu applied to a final partition (p_1 > len + 2).
struct FinalPartitionError : std::domain_error {
    explicit FinalPartitionError(const std::string& what) : std::domain_error(what) {}
};

/// nu_inv applied to an initial partition (p_1 < len, or p empty).
struct InitialPartitionError : std::domain_error {
    explicit InitialPartitionError(const std::string& what) : std::domain_error(what) {}
};

/// nu_inv(p) is undefined: nothing maps onto p.
bool is_initial(const Partition& p);
/// nu(p) is undefined: p_1 > len(p) + 2.
bool is_final(const Partition& p);

/// Successor map: remove the leftmost column, insert a new top row one cell
/// longer. Raises dinv by 1, preserves deficit, grows size by 1.
/// Defined iff p_1 <= len(p) + 2; in particular nu(()) = (1).
Partition nu(const Partition& p);
std::optional<Partition> nu_opt(const Partition& p);

/// Inverse of nu: (d_2+1, ..., d_s+1, 1^{d_1 - len}). Defined iff p is
/// nonempty with p_1 >= len(p).
Partition nu_inv(const Partition& p);
std::optional<Partition> nu_inv_opt(const Partition& p);

/// The maximal nu-orbit through a partition, or its prefix up to a dinv
/// cutoff when the orbit keeps going (open_right set in that case).
struct NuSegment {
    std::vector<Partition> members;  // consecutive dinv values
    int start_dinv = 0;
    bool open_right = false;

    int end_dinv() const { return start_dinv + static_cast<int>(members.size()) - 1; }
};

/// Applies nu_inv until the initial partition, then nu until a final
/// partition or until dinv reaches max_dinv.
NuSegment nu_segment(const Partition& p, int max_dinv);

/// Tail initiator TI(mu) = dpmap_N(0, 0, 1^{n_1}, 0, 1^{n_2}, 0, ..., 0,
/// 1^{n_{mu_1}}) with N = mu_1 + len(mu) + 1, where mu has n_j parts equal
/// to j. nu^m(TI(mu)) is defined for every m >= 0, so TI(mu) starts the
/// infinite nu-tail of the chain labelled mu. TI(()) = ().
Partition tail_initiator(const Partition& mu);

/// dinv(TI(mu)) = binom(mu_1 + len(mu) + 1, 2) - len(mu) - |mu|, closed form.
int tail_start_dinv(const Partition& mu);

/// mind(TI(mu)) = mu_1 + len(mu) + 1 (0 for the empty mu).
int tail_mind(const Partition& mu);

/// Recovers mu from p when p = TI(mu) for some mu, by reading the runs of
/// consecutive 1s in the Dyck vector of p at order mind(p); nullopt when p
/// is not a tail initiator.
std::optional<Partition> tail_type_of(const Partition& p);

}  // namespace qtcat

#endif
