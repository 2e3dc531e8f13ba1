from tangentpsc.utils.logger_config import get_logger
from typing import Any, Callable
from tqdm import tqdm
import concurrent.futures


def batch_invoke(function: Callable[[Any], Any], inputs: list[Any], num_workers: int,
                 desc: str = "Processing samples", show_progress: bool = True) -> list[dict]:
    """
    Invoke a pure function over independent work items in parallel
    :param function: The function applied to every item
    :param inputs: The list of all inputs
    :param num_workers: The number of workers
    :param desc: The progress bar description
    :param show_progress: Whether to display the tqdm progress bar
    :return: A list of {'index', 'result', 'error'} dicts in input order
    """
    logger = get_logger()

    def sample_generator():
        for i, sample in enumerate(inputs):
            yield i, sample

    def process_sample_with_progress(sample):
        i, sample = sample
        error = None
        try:
            result = function(sample)
        except Exception as e:
            logger.error('Error in batch item: {}'.format(e))
            result = None
            error = '{}: {}'.format(type(e).__name__, e)
        pbar.update(1)
        return {'index': i, 'result': result, 'error': error}

    num_workers = max(1, min(num_workers, len(inputs) or 1))
    with concurrent.futures.ThreadPoolExecutor(max_workers=num_workers) as executor:
        with tqdm(total=len(inputs), desc=desc, disable=not show_progress) as pbar:
            all_results = list(executor.map(process_sample_with_progress, sample_generator()))

    # input order
    all_results.sort(key=lambda res: res['index'])
    failed = [res['index'] for res in all_results if res['error'] is not None]
    if failed:
        logger.warning(f"{len(failed)} of {len(inputs)} items failed: {failed}")
    return all_results
