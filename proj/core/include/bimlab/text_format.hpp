#pragma once

#include <string>
#include <string_view>

#include "bimlab/bimachine.hpp"
#include "bimlab/transducer.hpp"

namespace bimlab {

// Line-oriented `v1` machine files. Fields are separated by whitespace, `#`
// starts a comment, `-` is the empty word and outputs are `.`-joined tokens.
//
//   transducer v1                     bimachine v1
//   alphabet <tok>...                 alphabet <tok>...
//   oalphabet <tok>...   (optional)   oalphabet <tok>...
//   states <N>                        left states <N> start <id>
//   initial <id>...                   larc <l> <tok> <l'>     (one per pair)
//   final <id>...                     right states <N> start <id>
//   arc <src> <dst> <in|-> <out|->    rarc <r> <tok> <r'>
//                                     epsout <out|->          (absent: undefined)
//                                     psi <l> <tok> <r> <out|->  (absent: undefined)

enum class MachineKind { kTransducer, kBimachine };

/// Kind named by the first significant line. Throws FormatError.
MachineKind sniff_kind(std::string_view text);

/// Canonical text; `oalphabet` is written only when it differs from `alphabet`.
std::string emit_transducer(const Transducer& t);
/// Throws FormatError (with line number) on syntax errors, unknown tokens and
/// out-of-range indices.
Transducer parse_transducer(std::string_view text);

std::string emit_bimachine(const Bimachine& b);
/// Also rejects automata with a missing (state, symbol) transition.
Bimachine parse_bimachine(std::string_view text);

}  // namespace bimlab
