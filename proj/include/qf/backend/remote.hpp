// Copyright 2026 The qframe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qf/backend/accelerator.hpp"

namespace qf {

/// Endpoint used when neither an option nor QF_REMOTE_ENDPOINT names one.
inline constexpr std::string_view kDefaultRemoteEndpoint = "http://127.0.0.1:8000";

/// The "endpoint" option if set, else QF_REMOTE_ENDPOINT, else the default.
std::string resolveEndpoint(const HetMap &options);

struct JobState {
    std::string status; ///< "queued", "running" or "done"
    obs::Counts counts;
    HetMap metadata;
};

/**
 * @brief HTTP client for the job protocol.
 *
 * `POST /jobs {"shots","seed"?,"program"}` answers `201 {"id"}`; `GET /jobs/{id}` answers
 * with the job status and, once done, its counts and metadata.
 */
class RemoteClient {
  public:
    explicit RemoteClient(std::string endpoint,
                          std::chrono::milliseconds requestTimeout = std::chrono::seconds(10));

    /// Throws HttpError on transport failure or a non-201 reply.
    [[nodiscard]] std::string submit(const ir::Composite &program, std::int64_t shots,
                                     std::optional<std::int64_t> seed = std::nullopt) const;

    /// Throws JobNotFound on 404 and HttpError otherwise.
    [[nodiscard]] JobState poll(const std::string &id) const;

    /// Polls until the job is done; throws Timeout once `deadline` has passed.
    [[nodiscard]] JobState wait(const std::string &id, std::chrono::milliseconds deadline,
                                std::chrono::milliseconds interval) const;

    [[nodiscard]] const std::string &endpoint() const noexcept { return endpoint_; }

  private:
    std::string endpoint_;
    std::chrono::milliseconds requestTimeout_;
};

/**
 * @brief Runs programs on a server that speaks the job protocol.
 *
 * Options: "endpoint", "shots" (default 1024), "seed", "timeout" (seconds, default 30) and
 * "poll-interval" (milliseconds, default 20). Returned bitstrings shorter than the buffer
 * are padded with '0'.
 */
class RemoteAccelerator final : public Accelerator {
  public:
    [[nodiscard]] std::string name() const override { return "remote"; }
    [[nodiscard]] std::string description() const override {
        return "Submits programs to a remote job server over HTTP.";
    }

    using Accelerator::execute;
    void execute(const BufferPtr &buffer, const ir::Composite &program) override;
};

/**
 * @brief Self-hosted implementation of the job protocol backed by the statevector simulator.
 *
 * Jobs run on a small worker pool. The job buffer is sized to the program (largest qubit or
 * classical bit plus one), so seeded results match a local run on a buffer of that size.
 */
class ReferenceServer {
  public:
    explicit ReferenceServer(std::string host = "127.0.0.1", std::size_t workers = 2);
    ~ReferenceServer();
    ReferenceServer(const ReferenceServer &) = delete;
    ReferenceServer &operator=(const ReferenceServer &) = delete;

    /// Binds and starts serving in the background; port 0 picks a free port. Returns the port.
    int start(int port = 0);
    void stop();

    [[nodiscard]] int port() const noexcept;
    [[nodiscard]] std::string endpoint() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace qf
