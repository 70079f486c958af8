#include "beaconloc/deployment_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "beaconloc/format.hpp"

namespace beaconloc {

namespace {

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(strip(line.substr(start)));
      break;
    }
    fields.push_back(strip(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field, const char* column, std::size_t line_no) {
  const std::string where =
      std::string(" for column '") + column + "' on line " + std::to_string(line_no);
  try {
    std::size_t pos = 0;
    const double v = std::stod(field, &pos);
    if (pos != field.size()) {
      throw std::runtime_error("trailing characters in value '" + field + "'" + where);
    }
    return v;
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("cannot parse value '" + field + "'" + where);
  } catch (const std::out_of_range&) {
    throw std::runtime_error("value '" + field + "' out of range" + where);
  }
}

}  // namespace

Deployment read_deployment_csv(std::istream& in, const Domain& domain) {
  std::vector<Beacon> beacons;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip(line);
    if (text.empty() || text[0] == '#') continue;
    if (!header_seen) {
      if (text != "id,x,y,r") {
        throw std::runtime_error("deployment CSV must start with header 'id,x,y,r' (line " +
                                 std::to_string(line_no) + ")");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_fields(text);
    if (fields.size() != 4) {
      throw std::runtime_error("expected 4 fields (id,x,y,r) on line " +
                               std::to_string(line_no) + ", got " +
                               std::to_string(fields.size()));
    }
    Beacon b;
    b.position.x = parse_double(fields[1], "x", line_no);
    b.position.y = parse_double(fields[2], "y", line_no);
    b.radius = parse_double(fields[3], "r", line_no);
    beacons.push_back(b);
  }
  if (!header_seen) {
    throw std::runtime_error("deployment CSV is missing the 'id,x,y,r' header");
  }
  return Deployment(domain, std::move(beacons));
}

Deployment load_deployment_file(const std::string& path, const Domain& domain) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open deployment file: " + path);
  return read_deployment_csv(in, domain);
}

void write_deployment_csv(const Deployment& dep, std::ostream& os) {
  os << "id,x,y,r\n";
  const auto& beacons = dep.beacons();
  for (std::size_t i = 0; i < beacons.size(); ++i) {
    os << i << ',' << format_full(beacons[i].position.x) << ','
       << format_full(beacons[i].position.y) << ',' << format_full(beacons[i].radius)
       << '\n';
  }
}

}  // namespace beaconloc
