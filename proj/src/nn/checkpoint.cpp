// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/nn/checkpoint.hpp"

#include <fstream>
#include <stdexcept>

#include "eegdec/common/binio.hpp"

namespace eegdec::nn {

namespace {
constexpr int kCkptVersion = 1;
}

void save_checkpoint(const std::filesystem::path& path, const nlohmann::json& arch,
                     const nlohmann::json& provenance, const ParamStore& params) {
  nlohmann::json header;
  header["format"] = "eegdec-ckpt";
  header["version"] = kCkptVersion;
  header["arch"] = arch;
  header["provenance"] = provenance;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [name, t] : params.items()) {
    table.push_back({{"name", name}, {"shape", t.shape()}});
  }
  header["params"] = table;
  const std::string htext = header.dump();

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open checkpoint for writing: " + path.string());
  binio::put_u32(os, static_cast<std::uint32_t>(htext.size()));
  os.write(htext.data(), static_cast<std::streamsize>(htext.size()));
  for (const auto& [name, t] : params.items()) {
    binio::put_f64_span(os, t.value());
  }
  if (!os) throw std::runtime_error("I/O failure while writing checkpoint: " + path.string());
}

LoadedCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open checkpoint: " + path.string());
  const std::uint32_t hlen = binio::get_u32(is);
  std::string htext(hlen, '\0');
  if (!is.read(htext.data(), hlen)) {
    throw std::runtime_error("malformed checkpoint: truncated header");
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(htext);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed checkpoint header: ") + e.what());
  }
  if (header.value("format", "") != "eegdec-ckpt") {
    throw std::runtime_error("not an eegdec checkpoint: " + path.string());
  }
  if (header.value("version", -1) != kCkptVersion) {
    throw std::runtime_error("unsupported checkpoint version");
  }

  LoadedCheckpoint out;
  out.arch = header.at("arch");
  out.provenance = header.value("provenance", nlohmann::json::object());
  for (const auto& item : header.at("params")) {
    out.names.push_back(item.at("name").get<std::string>());
    out.shapes.push_back(item.at("shape").get<std::vector<std::size_t>>());
  }
  for (std::size_t i = 0; i < out.names.size(); ++i) {
    std::size_t numel = 1;
    for (const std::size_t d : out.shapes[i]) numel *= d;
    std::vector<double> buf(numel);
    const std::size_t got = binio::get_f64_span(is, buf);
    if (got != numel * 8) {
      throw std::runtime_error("truncated checkpoint payload at parameter " + out.names[i] +
                               ": expected " + std::to_string(numel * 8) + " bytes, got " +
                               std::to_string(got));
    }
    out.values.push_back(std::move(buf));
  }
  return out;
}

void load_into(const LoadedCheckpoint& ckpt, ParamStore& params) {
  const auto& items = params.items();
  if (items.size() != ckpt.names.size()) {
    throw std::runtime_error("checkpoint parameter count mismatch: model has " +
                             std::to_string(items.size()) + ", checkpoint has " +
                             std::to_string(ckpt.names.size()));
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [name, tensor] = items[i];
    if (name != ckpt.names[i]) {
      throw std::runtime_error("checkpoint parameter order mismatch: expected " + name + ", found " +
                               ckpt.names[i]);
    }
    if (tensor.shape() != ckpt.shapes[i]) {
      throw std::runtime_error("checkpoint shape mismatch for " + name);
    }
    Tensor t = tensor;
    t.value() = ckpt.values[i];
  }
}

}  // namespace eegdec::nn
