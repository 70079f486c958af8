#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace beaconloc {

struct Point {
  double x{0.0};
  double y{0.0};
};

// A sensor at a known position that reports the target iff the target lies
// strictly inside its sensing disk.
struct Beacon {
  Point position{};
  double radius{0.0};
};

// Bounded rectangular region with its origin fixed at (0,0).
struct Domain {
  double width{100.0};
  double height{100.0};

  double area() const { return width * height; }
  bool contains(const Point& p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
};

// Ordered binary reading vector; element i is beacon i's detection result.
class Signature {
 public:
  Signature() = default;
  // Elements must be exactly 0 or 1.
  explicit Signature(std::vector<std::uint8_t> bits);
  // Parses a '0'/'1' string, index 0 first.
  static Signature parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept;
};

// Ordered beacon set inside a bounded domain. Beacon order is stable and
// defines the bit order of every Signature derived from the deployment.
class Deployment {
 public:
  Deployment() = default;
  // Validates that the domain extents are positive and every beacon has a
  // finite position inside the domain and a finite radius >= 0.
  Deployment(Domain domain, std::vector<Beacon> beacons);

  const Domain& domain() const { return domain_; }
  const std::vector<Beacon>& beacons() const { return beacons_; }
  std::size_t size() const { return beacons_.size(); }

 private:
  Domain domain_{};
  std::vector<Beacon> beacons_;
};

// True iff the squared distance from x to the beacon is strictly less than
// radius^2. Points exactly on the disk boundary are not detected.
bool detects(const Beacon& beacon, const Point& x);

// The full reading vector at x; bit i equals detects(beacons[i], x).
Signature signature_at(const Deployment& dep, const Point& x);

}  // namespace beaconloc
