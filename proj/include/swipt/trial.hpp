#pragma once

#include "swipt/params.hpp"

namespace swipt {

/// Decoding events of one block under one protocol.
///
///   ndf / ndn  user N decoded x_F / x_N in the direct phase
///   fdf / fdn  user F decoded x_F / x_N in the direct phase
///   nhf        N relayed x_F and F decoded it after combining
///   fhn        F relayed x_N and N decoded it after combining
///
/// Events a protocol never attempts stay false. beta_* are the energy
/// harvesting fractions, nonzero only when the user decoded both messages.
struct TrialOutcome {
    bool ndf = false;
    bool ndn = false;
    bool fdf = false;
    bool fdn = false;
    bool nhf = false;
    bool fhn = false;
    bool outage_N = false;
    bool outage_F = false;
    double beta_N = 0.0;
    double beta_F = 0.0;

    bool system_outage() const { return outage_N || outage_F; }
};

/// Structural invariants every outcome of `protocol` must satisfy.
inline bool outcome_consistent(const TrialOutcome& o, Protocol protocol)
{
    const bool n_full = o.ndf && o.ndn;
    const bool f_full = o.fdf && o.fdn;
    bool ok = o.beta_N >= 0.0 && o.beta_N < 1.0 && o.beta_F >= 0.0 && o.beta_F < 1.0;
    ok = ok && (o.beta_N == 0.0 || n_full) && (o.beta_F == 0.0 || f_full);
    ok = ok && (!o.nhf || (!o.fdf && n_full));
    ok = ok && (!o.fhn || (!o.ndn && f_full));
    ok = ok && o.outage_F == !(o.fdf || o.nhf);
    ok = ok && o.outage_N == !(o.ndn || o.fhn);
    if (is_noma(protocol)) {
        // SIC order: own message only after the far user's.
        ok = ok && (!o.ndn || o.ndf) && (!o.fdn || o.fdf);
    }
    if (protocol == Protocol::Csanc) ok = ok && !o.fdn && !o.fhn && o.beta_F == 0.0;
    return ok;
}

} // namespace swipt
