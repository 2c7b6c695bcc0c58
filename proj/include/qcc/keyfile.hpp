#pragma once

#include <string>
#include <string_view>

#include "qcc/cipher.hpp"

namespace qcc {

/**
 * Key file layout (UTF-8, LF line endings, bit-exact):
 *
 *   variant=<main|mod1|mod2>;I=<int>;palette=<0|1>
 *   X:<axis>
 *   Y:<axis>
 *   V:<axis>            (only when palette=1)
 *
 * where <axis> is
 *
 *   m=<int>;e=<+1|-1>;a=<int>;b=<int>;c=<frac>+<frac>t;d=<frac>+<frac>t;
 *   sml=<perm of s,m,l>;X=<+|->;eps=<frac>+<frac>t
 *
 * on one line, and <frac> is <int>/<posint> in lowest terms. Serialization
 * is canonical: parse(serialize(k)) == k for every valid key.
 */
std::string serialize_key(const CipherKey& key);

/// Throws SyntaxError (with line:column) or InvalidKey (named invariant).
CipherKey parse_key(std::string_view text);

} // namespace qcc
