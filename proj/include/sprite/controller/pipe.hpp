#pragma once

#include <chrono>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>

namespace sprite::controller {

// In-process byte stream pair standing in for the USB serial link.
class LinePipe {
  struct Channel {
    std::mutex mu;
    std::condition_variable_any cv;
    std::string bytes;
    bool closed = false;
  };

 public:
  class End {
   public:
    void write(std::string_view bytes);
    // Next complete line without its newline; nullopt once the peer closed and
    // the buffer is drained, or on stop / timeout.
    std::optional<std::string> read_line(std::stop_token stop = {});
    std::optional<std::string> read_line_for(std::chrono::milliseconds timeout);
    void close();

   private:
    friend class LinePipe;
    End(std::shared_ptr<Channel> in, std::shared_ptr<Channel> out) : in_(std::move(in)), out_(std::move(out)) {}
    std::shared_ptr<Channel> in_;
    std::shared_ptr<Channel> out_;
  };

  LinePipe();
  End& host() { return host_; }
  End& device() { return device_; }

 private:
  std::shared_ptr<Channel> to_device_;
  std::shared_ptr<Channel> to_host_;
  End host_;
  End device_;
};

}  // namespace sprite::controller
