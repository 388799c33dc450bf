#pragma once

#include <iosfwd>
#include <string>

#include "dnsurf/cochain.hpp"
#include "dnsurf/poset.hpp"

namespace dnsurf::io {

// Canonical poset interchange text (JSON, versioned). Writing is deterministic:
// write(read(write(p))) == write(p) byte for byte. The gluing spec, when the
// complex was built from one, travels along.
std::string write_poset(const FacePoset& p);
FacePoset read_poset(const std::string& text);

void write_poset(std::ostream& out, const FacePoset& p);
FacePoset read_poset(std::istream& in);

std::string hash_hex(const FacePoset& p);

// Cochain line format:
//   dnsurf-cochain/1 dim=<k> complex=<16 hex> n=<count> bits=<hex>
// bits: nibble j covers positions 4j..4j+3, position 4j+b contributing 1<<b.
// Reading also accepts a bare hex string of exactly ceil(n/4) digits.
std::string write_cochain(const Cochain& c);
Cochain read_cochain(const FacePoset& p, int dim, const std::string& text);

}  // namespace dnsurf::io
