"""Service entry point. Refuses to start if the checkpoint cannot load."""

import argparse
import logging
import os


def main():
    parser = argparse.ArgumentParser(description="Extractive QA reader service")
    parser.add_argument(
        "--model",
        default=os.environ.get("READER_MODEL", "deepset/roberta-base-squad2"),
        help="SQuAD-fine-tuned checkpoint name or local path",
    )
    parser.add_argument("--host", default=os.environ.get("READER_HOST", "127.0.0.1"))
    parser.add_argument(
        "--port", type=int, default=int(os.environ.get("READER_PORT", "8001"))
    )
    parser.add_argument(
        "--torch-threads",
        type=int,
        default=int(os.environ.get("READER_TORCH_THREADS", "0")),
        help="Bound CPU inference parallelism (0 keeps torch's default)",
    )
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO)

    import torch
    import uvicorn

    from .app import create_app
    from .model import TransformerBackend

    if args.torch_threads > 0:
        torch.set_num_threads(args.torch_threads)

    backend = TransformerBackend(args.model)  # load failure aborts startup
    uvicorn.run(create_app(backend), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
