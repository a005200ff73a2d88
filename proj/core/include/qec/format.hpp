#pragma once

// Textual rendering of expanded code vectors.

#include <string>

#include "qec/qstate.hpp"

namespace qec {

/// Render one expanded code vector as listing terms in word-index order
/// (m = 0, 1, ..., w-1): "+|word>" / "-|word>", four per line, lines
/// indented two spaces, each line newline-terminated.
std::string format_stanza_terms(const SignedCode& code, std::uint32_t b);

/// Full listing of all 2^K code vectors of a sign-allocated code.  Each
/// stanza is a header line "|vBB..B> =" (K binary digits of b, most
/// significant first; "|v> =" when K = 0) followed by its terms; stanzas
/// are separated by one blank line and the listing ends with a newline.
std::string expand_listing(const SignedCode& code);

}  // namespace qec
