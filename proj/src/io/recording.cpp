// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/io/recording.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "eegdec/common/binio.hpp"

namespace eegdec::io {

namespace {
constexpr int kFormatVersion = 1;
}

void Recording::validate() const {
  if (eeg.rows() < 1) {
    throw std::invalid_argument("recording must have at least one channel");
  }
  if (sample_rate_hz <= 0.0 || !std::isfinite(sample_rate_hz)) {
    throw std::invalid_argument("sample_rate_hz must be positive and finite");
  }
  for (const float v : eeg.data()) {
    if (!std::isfinite(v)) throw std::invalid_argument("recording contains a non-finite sample");
  }
  if (!envelope.empty()) {
    if (envelope.size() != eeg.cols()) {
      throw std::invalid_argument("envelope length must equal the sample count");
    }
    for (const float v : envelope) {
      if (!std::isfinite(v)) throw std::invalid_argument("envelope contains a non-finite sample");
    }
  }
}

void write_recording(const Recording& rec, const std::filesystem::path& path) {
  rec.validate();
  nlohmann::json header = {
      {"format", "eegrec"},
      {"version", kFormatVersion},
      {"channels", rec.eeg.rows()},
      {"samples", rec.eeg.cols()},
      {"sample_rate_hz", rec.sample_rate_hz},
      {"subject_id", rec.subject_id},
      {"trial_id", rec.trial_id},
      {"has_envelope", rec.has_envelope()},
  };
  const std::string htext = header.dump();

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  binio::put_u32(os, static_cast<std::uint32_t>(htext.size()));
  os.write(htext.data(), static_cast<std::streamsize>(htext.size()));
  binio::put_f32_span(os, rec.eeg.data());
  if (rec.has_envelope()) binio::put_f32_span(os, rec.envelope);
  if (!os) throw std::runtime_error("I/O failure while writing: " + path.string());
}

Recording read_recording(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path.string());

  const std::uint32_t hlen = binio::get_u32(is);
  std::string htext(hlen, '\0');
  if (!is.read(htext.data(), hlen)) {
    throw std::runtime_error("malformed header: file shorter than declared header length");
  }

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(htext);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed header: ") + e.what());
  }
  if (header.value("format", "") != "eegrec") {
    throw std::runtime_error("malformed header: not an eegrec container");
  }
  if (header.value("version", -1) != kFormatVersion) {
    throw std::runtime_error("unsupported container version " +
                             std::to_string(header.value("version", -1)));
  }

  Recording rec;
  std::size_t channels = 0, samples = 0;
  bool has_env = false;
  try {
    channels = header.at("channels").get<std::size_t>();
    samples = header.at("samples").get<std::size_t>();
    rec.sample_rate_hz = header.at("sample_rate_hz").get<double>();
    rec.subject_id = header.at("subject_id").get<std::string>();
    rec.trial_id = header.at("trial_id").get<std::string>();
    has_env = header.at("has_envelope").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed header: ") + e.what());
  }
  if (channels < 1) throw std::invalid_argument("malformed header: channel count must be >= 1");

  rec.eeg = MatrixF(channels, samples);
  const std::size_t expect_eeg = channels * samples * 4;
  const std::size_t got_eeg = binio::get_f32_span(is, rec.eeg.data());
  if (got_eeg != expect_eeg) {
    throw std::runtime_error("truncated payload: expected " + std::to_string(expect_eeg) +
                             " EEG bytes, got " + std::to_string(got_eeg));
  }
  if (has_env) {
    rec.envelope.resize(samples);
    const std::size_t expect_env = samples * 4;
    const std::size_t got_env = binio::get_f32_span(is, rec.envelope);
    if (got_env != expect_env) {
      throw std::runtime_error("truncated payload: expected " + std::to_string(expect_env) +
                               " envelope bytes, got " + std::to_string(got_env));
    }
  }
  if (is.peek() != std::char_traits<char>::eof()) {
    throw std::runtime_error("trailing bytes after declared payload");
  }
  rec.validate();
  return rec;
}

}  // namespace eegdec::io
