// Core domain types shared by the analytics, workload, engine and harness layers.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mrcn {

enum class Strategy { FineGrained, Conda, Mrcn };
enum class SigMode { ExactSet, Bloom };
enum class ConflictMode { AddressOverlap, RwAware };

const char* to_string(Strategy s);
const char* to_string(SigMode m);
const char* to_string(ConflictMode m);
Strategy strategy_from_string(const std::string& s);
SigMode sig_mode_from_string(const std::string& s);
ConflictMode conflict_mode_from_string(const std::string& s);

// System-wide model constants. Times are in NMP cycles.
struct SystemParams {
  std::uint64_t shared_addresses = 4096;  // K, size of the shared address space
  double f_cpu = 0.5;                     // fraction of CPU instructions touching shared space
  double f_nmp = 0.5;                     // fraction of NMP instructions touching shared space
  double t_inst = 1.0;                    // NMP cycles per instruction
  double t_tran = 50.0;                   // signature send + conflict report round trip
  double t_commit = 8.0;                  // NMP-side commit
  double t_cpu = 2.0 / 3.0;               // NMP cycles per CPU instruction (3 GHz CPU vs 2 GHz NMP)

  // Throws std::invalid_argument on violated invariants.
  void validate() const;
};

// One offloaded block: instruction counts and rollback-point layout.
struct BlockSpec {
  std::uint32_t theta_nmp = 100;          // instructions in the offloaded block
  std::optional<std::uint32_t> theta_cpu; // CPU instructions per epoch; defaulted when absent
  std::uint32_t breakpoints = 1;          // b, number of rollback segments

  void validate() const;

  // theta_cpu when set, otherwise the CPU instructions that fit in one
  // NMP epoch: round((theta_nmp*t_inst + t_tran) / t_cpu).
  std::uint32_t resolved_theta_cpu(const SystemParams& params) const;
};

// The N offloaded blocks plus everything needed to materialize traces.
struct OffloadPlan {
  std::vector<BlockSpec> blocks;
  std::uint64_t shared_addresses = 4096;  // K, must match SystemParams when both are used
  std::uint64_t seed = 0;                 // base seed for trace materialization
  double write_ratio = 0.5;               // probability an access is a write, both sides

  void validate() const;
};

}  // namespace mrcn
