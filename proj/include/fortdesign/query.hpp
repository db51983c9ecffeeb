#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fortdesign/descriptors.hpp"
#include "fortdesign/designs.hpp"

namespace fortdesign {

/// A decision query: the space, the two subsets and the design type.
///
/// On disk it is a list of "key: value" lines with dotted keys:
///
///     space.size: aleph0
///     type: 1
///     C.size: 2
///     C.contains_b: true
///     D: {size: aleph0, b: true, cosize: aleph0}
///
/// A subset may be given field by field (C.size, C.contains_b or C.b,
/// C.cosize) or as one inline record. '#' starts a comment.
struct Query {
  SpaceDescriptor x;
  SubsetDescriptor c;
  SubsetDescriptor d;
  DesignType type;
};

/// Parse or validation failure; the message carries the line or field.
class QueryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates (C and D nonempty and valid in X).
Query parse_query(std::istream& in);

std::string format_query(const Query& q);

}  // namespace fortdesign
