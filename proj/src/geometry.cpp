#include "beaconloc/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace beaconloc {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Signature::Signature(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    require(b == 0 || b == 1, "signature elements must be exactly 0 or 1");
  }
}

Signature Signature::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw std::invalid_argument("signature string may contain only '0' and '1'");
    }
  }
  return Signature(std::move(bits));
}

std::string Signature::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::size_t SignatureHash::operator()(const Signature& s) const noexcept {
  // FNV-1a over the bit bytes.
  std::size_t h = 14695981039346656037ULL;
  for (std::uint8_t b : s.bits()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

Deployment::Deployment(Domain domain, std::vector<Beacon> beacons)
    : domain_(domain), beacons_(std::move(beacons)) {
  require(std::isfinite(domain_.width) && domain_.width > 0.0 &&
              std::isfinite(domain_.height) && domain_.height > 0.0,
          "domain extents must be finite and positive");
  for (std::size_t i = 0; i < beacons_.size(); ++i) {
    const Beacon& b = beacons_[i];
    const std::string tag = "beacon " + std::to_string(i);
    require(std::isfinite(b.position.x) && std::isfinite(b.position.y),
            tag + " position must be finite");
    require(std::isfinite(b.radius) && b.radius >= 0.0,
            tag + " radius must be finite and >= 0");
    require(domain_.contains(b.position), tag + " lies outside the domain");
  }
}

bool detects(const Beacon& beacon, const Point& x) {
  const double dx = x.x - beacon.position.x;
  const double dy = x.y - beacon.position.y;
  return dx * dx + dy * dy < beacon.radius * beacon.radius;
}

Signature signature_at(const Deployment& dep, const Point& x) {
  std::vector<std::uint8_t> bits(dep.size());
  const auto& beacons = dep.beacons();
  for (std::size_t i = 0; i < beacons.size(); ++i) {
    bits[i] = detects(beacons[i], x) ? 1 : 0;
  }
  return Signature(std::move(bits));
}

}  // namespace beaconloc
