#include "sprite/controller/pipe.hpp"

namespace sprite::controller {

LinePipe::LinePipe()
    : to_device_(std::make_shared<Channel>()),
      to_host_(std::make_shared<Channel>()),
      host_(to_host_, to_device_),
      device_(to_device_, to_host_) {}

void LinePipe::End::write(std::string_view bytes) {
  {
    std::lock_guard lock(out_->mu);
    if (out_->closed) return;
    out_->bytes.append(bytes);
  }
  out_->cv.notify_all();
}

std::optional<std::string> LinePipe::End::read_line(std::stop_token stop) {
  std::unique_lock lock(in_->mu);
  const bool ready = in_->cv.wait(lock, stop, [&] { return in_->bytes.find('\n') != std::string::npos || in_->closed; });
  const std::size_t nl = in_->bytes.find('\n');
  if (!ready || nl == std::string::npos) return std::nullopt;
  std::string line = in_->bytes.substr(0, nl);
  in_->bytes.erase(0, nl + 1);
  return line;
}

std::optional<std::string> LinePipe::End::read_line_for(std::chrono::milliseconds timeout) {
  std::unique_lock lock(in_->mu);
  in_->cv.wait_for(lock, timeout, [&] { return in_->bytes.find('\n') != std::string::npos || in_->closed; });
  const std::size_t nl = in_->bytes.find('\n');
  if (nl == std::string::npos) return std::nullopt;
  std::string line = in_->bytes.substr(0, nl);
  in_->bytes.erase(0, nl + 1);
  return line;
}

void LinePipe::End::close() {
  for (const auto& ch : {in_, out_}) {
    {
      std::lock_guard lock(ch->mu);
      ch->closed = true;
    }
    ch->cv.notify_all();
  }
}

}  // namespace sprite::controller
