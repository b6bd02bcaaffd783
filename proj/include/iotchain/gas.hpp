/*
   Copyright 2026 The iotchain Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace iotchain {

// Measured costs of the contract's building blocks, in gas units, plus the
// flat per-transaction base. Overridable through a key=value config file.
struct GasSchedule {
    uint64_t tx_base{21000};
    uint64_t event_emit{2560};
    uint64_t map_search{1033};
    uint64_t map_entry_create{45938};
    uint64_t map_entry_modify{6110};

    void validate() const {
        if (tx_base == 0 || event_emit == 0 || map_search == 0 || map_entry_create == 0 ||
            map_entry_modify == 0) {
            throw std::invalid_argument("gas schedule constants must be strictly positive");
        }
    }

    static GasSchedule parse_config(std::istream& in) {
        GasSchedule schedule;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const size_t hash = line.find('#');
            if (hash != std::string::npos) {
                line.erase(hash);
            }
            const size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) {
                continue;
            }
            const size_t eq = line.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("gas config line " + std::to_string(line_no) +
                                            ": expected key=value");
            }
            auto trim = [](std::string s) {
                const size_t b = s.find_first_not_of(" \t\r");
                const size_t e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
            };
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            uint64_t parsed = 0;
            try {
                parsed = std::stoull(value);
            } catch (const std::exception&) {
                throw std::invalid_argument("gas config line " + std::to_string(line_no) +
                                            ": bad number '" + value + "'");
            }
            if (key == "tx_base") {
                schedule.tx_base = parsed;
            } else if (key == "event_emit") {
                schedule.event_emit = parsed;
            } else if (key == "map_search") {
                schedule.map_search = parsed;
            } else if (key == "map_entry_create") {
                schedule.map_entry_create = parsed;
            } else if (key == "map_entry_modify") {
                schedule.map_entry_modify = parsed;
            } else {
                throw std::invalid_argument("gas config line " + std::to_string(line_no) +
                                            ": unknown key '" + key + "'");
            }
        }
        schedule.validate();
        return schedule;
    }

    static GasSchedule load_config(const std::string& path) {
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument("cannot open gas config file: " + path);
        }
        return parse_config(in);
    }
};

// Accumulates the charges incurred by one transaction's execution path.
class GasMeter {
  public:
    explicit GasMeter(const GasSchedule& schedule) : schedule_{&schedule} {}

    void charge_tx_base() { used_ += schedule_->tx_base; }
    void charge_event_emit() { used_ += schedule_->event_emit; }
    void charge_map_search() { used_ += schedule_->map_search; }
    void charge_map_entry_create() { used_ += schedule_->map_entry_create; }
    void charge_map_entry_modify() { used_ += schedule_->map_entry_modify; }

    [[nodiscard]] uint64_t used() const noexcept { return used_; }

  private:
    const GasSchedule* schedule_;
    uint64_t used_{0};
};

// Snapshot price of a gas unit in currency (USD), a static configurable
// constant rather than a live market feed.
inline constexpr double kDefaultGasPrice = 0.004e-4;

inline double gas_to_currency(uint64_t gas, double price_per_gas = kDefaultGasPrice) {
    return static_cast<double>(gas) * price_per_gas;
}

}  // namespace iotchain
