#pragma once

#include <cstddef>
#include <vector>

namespace deltaconf {

struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point a;
  Point b;
  std::size_t owner = 0;  // caller-defined tag, e.g. the edge a segment belongs to
};

enum class ContactKind {
  Crossing,  // interiors cross at a single point
  Touch,     // a single common point that is an endpoint of at least one segment
  Overlap,   // collinear with a common piece of positive length
};

struct Contact {
  std::size_t first;
  std::size_t second;
  ContactKind kind;
  Point at;                     // a common point
  bool endpoint_of_both = false;  // Touch only: `at` ends both segments
};

/// Classifies the common points of two segments, if any. Orientation tests
/// treat |cross| <= eps as zero; eps = 0 is exact for integer coordinates
/// below 2^25.
bool segment_contact(const Segment& s, const Segment& t, double eps, Contact& out);

/// All contacting pairs (first < second) found via a uniform grid over the
/// segments' bounding boxes. Pairs with equal owners are skipped when
/// `skip_same_owner` is set.
std::vector<Contact> segment_contacts(const std::vector<Segment>& segments, double eps = 0,
                                      bool skip_same_owner = false);

}  // namespace deltaconf
