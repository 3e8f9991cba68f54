#include "ffdet/modulus_cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ffdet {

namespace {

bool parse_int(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

// Parses and validates one cache line; returns false with `why` set on
// any defect.
bool parse_line(const std::string& line, std::int64_t& p, int& r,
                std::vector<std::int64_t>& modulus, std::string& why) {
  std::istringstream in(line);
  std::string p_tok, r_tok, coeff_tok;
  if (!(in >> p_tok >> r_tok >> coeff_tok)) {
    why = "expected 'p r c0,...,cr'";
    return false;
  }
  std::string extra;
  if (in >> extra) {
    why = "trailing tokens";
    return false;
  }
  std::int64_t r64 = 0;
  if (!parse_int(p_tok, p) || !parse_int(r_tok, r64)) {
    why = "p and r must be decimal integers";
    return false;
  }
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    why = "p is not an odd prime";
    return false;
  }
  if (r64 < 1 || r64 > 64) {
    why = "r out of range";
    return false;
  }
  r = static_cast<int>(r64);
  modulus.clear();
  std::istringstream coeffs(coeff_tok);
  std::string item;
  while (std::getline(coeffs, item, ',')) {
    std::int64_t c = 0;
    if (!parse_int(item, c)) {
      why = "bad coefficient '" + item + "'";
      return false;
    }
    modulus.push_back(c);
  }
  if (modulus.size() != static_cast<std::size_t>(r) + 1) {
    why = "expected r+1 coefficients";
    return false;
  }
  for (std::int64_t c : modulus) {
    if (c < 0 || c >= p) {
      why = "coefficient out of range [0, p)";
      return false;
    }
  }
  if (modulus.back() != 1) {
    why = "modulus is not monic";
    return false;
  }
  if (r >= 2 && !is_irreducible(modulus, p)) {
    why = "modulus is reducible";
    return false;
  }
  return true;
}

std::string format_line(std::int64_t p, int r, const std::vector<std::int64_t>& modulus) {
  std::string out = std::to_string(p) + " " + std::to_string(r) + " ";
  for (std::size_t i = 0; i < modulus.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(modulus[i]);
  }
  return out;
}

}  // namespace

ModulusCache::ModulusCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::int64_t p = 0;
    int r = 0;
    std::vector<std::int64_t> modulus;
    std::string why;
    if (!parse_line(line, p, r, modulus, why)) {
      std::cerr << "ffdet: warning: " << path_ << ":" << line_no
                << ": skipping corrupt cache line (" << why << ")\n";
      continue;
    }
    entries_.emplace(std::make_pair(p, r), std::move(modulus));  // first valid line wins
  }
}

std::optional<std::vector<std::int64_t>> ModulusCache::find(std::int64_t p, int r) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find({p, r});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ModulusCache::store(std::int64_t p, int r, const std::vector<std::int64_t>& modulus) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = entries_.emplace(std::make_pair(p, r), modulus);
  if (!inserted || path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    std::cerr << "ffdet: warning: cannot append to cache file " << path_ << "\n";
    return;
  }
  out << format_line(p, r, modulus) << "\n";
}

std::size_t ModulusCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

FieldCtx make_field(std::int64_t p, int r, ModulusCache* cache) {
  if (r == 1) return FieldCtx::prime_field(p);
  if (cache) {
    if (auto cached = cache->find(p, r)) {
      return FieldCtx::extension_field(p, r, *cached);
    }
    FieldCtx ctx = FieldCtx::extension_field(p, r);
    cache->store(p, r, ctx.modulus());
    return ctx;
  }
  return FieldCtx::extension_field(p, r);
}

}  // namespace ffdet
