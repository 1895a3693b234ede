import logging

from yachalk import chalk

from diary_embed.diary import alice_diary, combine_diaries
from diary_embed.embed import F, F_side, classify_pair, get_embedding, measure_pair
from diary_embed.hexgroup import Family, GroupElement, bfs_ball, growth_series, side_left_rep
from diary_embed.words import Sentence, Word, sentence_tree_distance, word_tree_distance

chalk_colors = {
    'debug': chalk.grey,
    'info': chalk.green,
    'warning': chalk.yellow_bright,
    'error': chalk.bold.red,
    'critical': chalk.bold.red,
}


class ColorFormatter(logging.Formatter):
    """
    Colors a log line by its level, white for levels without a color.
    """

    def format(self, record):
        color = chalk_colors.get(record.levelname.lower(), chalk.white)
        return color(logging.Formatter.format(self, record))


logging.ColorFormatter = ColorFormatter  # type: ignore
