// Wall flatness: certificates, verifiers for the two certificate flavours,
// exhaustive certificate search, and the constructive prover that turns
// access paths into a verified certificate.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatwall/enclosure.hpp"
#include "flatwall/multigraph.hpp"
#include "flatwall/rendition.hpp"
#include "flatwall/separation.hpp"
#include "flatwall/society.hpp"
#include "flatwall/wall.hpp"

namespace flatwall {

// A flatness certificate for a wall W inside a host graph: a separation
// (A, B) whose interface lies on W's boundary cycle D, an ordered interface
// subset omega, optionally the omega members chosen off the enclosing cycle,
// and optionally a disk rendition of (induced(g, B), omega) as a witness.
struct FlatnessCertificate {
  Separation sep;
  std::vector<VertexId> omega;                      // ordered around D
  std::optional<std::vector<VertexId>> peg_choice;  // subset of omega
  std::optional<Rendition> witness;
};

enum class FlatDefinition { Old, New };

enum class SearchStatus { Found, AbsentExhaustive, UnknownBudget };

struct CertificateSearch {
  SearchStatus status = SearchStatus::UnknownBudget;
  std::optional<FlatnessCertificate> cert;
  std::uint64_t tried = 0;  // candidates examined before stopping
};

// Both verifiers return one line per violated condition; empty means the
// certificate passes.  w must be realized inside g.
//
// New flavour: (1) sep is a separation of g with V(w) inside sep.b and
// interface inside V(D) where D = boundary(w); (2) omega lies inside the
// interface, repeats no vertex, and is ordered as D induces (rotation or
// reflection); (3) omega meets the interior of every peg interval of w;
// (4) (induced(g, sep.b), omega) draws in a disk with omega on the rim --
// decided by the certificate's witness when present, by search otherwise.
std::vector<std::string> verify_flat_new(const Multigraph& g, const Wall& w,
                                         const FlatnessCertificate& c);

// Old flavour: the whole interface A cap B plays the interface role; it must
// contain, per peg interval, a minimum number of interior pegs depending on
// the interval's brick kind (1 for top/bottom bricks, 2 for bulging sides and
// recessed corners, 3 for bulging corners), and (induced(g, sep.b), A cap B
// in D-order) must draw in a disk.  When c.peg_choice is present it must
// supply those pegs and lie inside the interface.
std::vector<std::string> verify_flat_old(const Multigraph& g, const Wall& w,
                                         const FlatnessCertificate& c);

// Exhaustive certificate search over separations with interface inside V(D),
// smallest interfaces first.  Every candidate examined counts against
// `budget`; exceeding it yields UnknownBudget.  A Found result always passes
// the matching verifier.
CertificateSearch search_certificate(const Multigraph& g, const Wall& w,
                                     FlatDefinition def, std::uint64_t budget);

// Constructive prover.  s.g hosts the wall; access supplies one path per peg
// interval of w, ending at the interval's terminus, meeting V(w) only there,
// with the four corner paths pairwise vertex-disjoint.  Runs the enclosure
// engine on w's boundary cycle and packages the result as a certificate that
// is machine-checked against verify_flat_new before being returned.
FlatnessCertificate prove_wall_flat(const Society& s, const Wall& w,
                                    const AccessPaths& access);

// Inherit flatness downward: given a passing new-flavour certificate for w,
// produce one for a subwall of height >= 3.  Access paths for the subwall are
// built inside induced(g, cert_w.sep.b): an interval keeps a single-vertex
// path when cert_w.omega already meets its interior, and is otherwise routed
// across w to the host boundary and along it to the nearest omega vertex.
FlatnessCertificate subwall_flatness(const Multigraph& g, const Wall& w,
                                     const FlatnessCertificate& cert_w,
                                     const Wall& sub);

// JSON shape: {"A": [...], "B": [...], "omega": [...], "pegChoice": [...]}
// with pegChoice null when absent; the witness is never serialized.
nlohmann::ordered_json certificate_to_json(const FlatnessCertificate& c);
FlatnessCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace flatwall
